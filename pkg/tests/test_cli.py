import json
import math

import pytest

from invlindley.cli import main
from invlindley.distribution import cdf


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fit_builtin_table(capsys):
    code, out, _ = run(capsys, "fit", "--builtin", "headneck_rt")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].split()[0] == "inverse_lindley"
    assert "55.4540" in lines[1]
    assert "683.5029" in lines[1]
    assert lines[2].split()[0] == "inverse_rayleigh"
    assert "741.3652" in lines[2]


def test_fit_second_dataset(capsys):
    code, out, _ = run(capsys, "fit", "--builtin", "headneck_ctrt")
    assert code == 0
    assert "77.6755" in out


def test_fit_missing_file(capsys):
    code, out, err = run(capsys, "fit", "--data", "missing.txt")
    assert code == 2
    assert out == ""
    assert err.strip()


def test_fit_csv_and_json(capsys):
    code, out, _ = run(capsys, "fit", "--builtin", "headneck_rt", "--format", "csv")
    assert code == 0
    header, row1, _ = out.strip().splitlines()
    assert header == "model,theta_hat,loglik,aic,bic,ks,n"
    fields = row1.split(",")
    assert abs(float(fields[1]) - 55.4539548470697) <= 1e-10

    code, out, _ = run(capsys, "fit", "--builtin", "headneck_rt", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["model"] == "inverse_lindley"
    assert abs(rows[0]["theta_hat"] - 55.4539548470697) <= 1e-10


def test_gof_writes_curve(capsys, tmp_path):
    out_path = tmp_path / "curve.csv"
    code, out, _ = run(capsys, "gof", "--builtin", "headneck_ctrt",
                       "--curve", str(out_path))
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "x,empirical,fitted"
    assert len(lines) == 45
    first = lines[1].split(",")
    assert float(first[0]) == 12.20
    assert abs(float(first[1]) - 1.0 / 44.0) <= 1e-15


def test_reliability_real_data(capsys):
    code, out, _ = run(capsys, "reliability",
                       "--strength", "headneck_ctrt", "--stress", "headneck_rt")
    assert code == 0
    rows = {line.split()[0]: line.split()[1:] for line in out.strip().splitlines()[1:]}
    assert rows["theta1"][0] == "77.6755"
    assert rows["theta2"][0] == "55.4540"
    assert rows["r"][0] == "0.5847"
    lo, hi = float(rows["r"][1]), float(rows["r"][2])
    assert 0.0 <= lo < hi <= 1.0


def test_reliability_identical_roles(capsys, tmp_path):
    p = tmp_path / "same.txt"
    p.write_text("1.5\n2.5\n4.0\n8.0\n0.9\n")
    code, out, _ = run(capsys, "reliability", "--strength", str(p),
                       "--stress", str(p))
    assert code == 0
    rows = {line.split()[0]: line.split()[1:] for line in out.strip().splitlines()[1:]}
    assert rows["r"][0] == "0.5000"


def test_reliability_ci_clipped_in_csv(capsys, tmp_path):
    # two tiny samples blow the delta-method interval past [0,1]
    p = tmp_path / "tiny.txt"
    p.write_text("1.0\n1.1\n")
    q = tmp_path / "tiny2.txt"
    q.write_text("5.0\n250.0\n")
    code, out, _ = run(capsys, "reliability", "--strength", str(q),
                       "--stress", str(p), "--format", "csv")
    assert code == 0
    for line in out.strip().splitlines()[1:]:
        name, _, lo, hi = line.split(",")
        if name == "r":
            assert 0.0 <= float(lo) and float(hi) <= 1.0


def test_bayes_jeffrey_elf(capsys):
    code, out, _ = run(capsys, "bayes", "--strength", "headneck_ctrt",
                       "--stress", "headneck_rt", "--prior", "jeffrey",
                       "--loss", "elf")
    assert code == 0
    rows = {line.split()[0]: line.split()[1] for line in out.strip().splitlines()[1:]}
    assert rows["theta1"] == "75.9910"
    assert rows["theta2"] == "54.4230"
    assert rows["r"] == "0.5792"


def test_bayes_gamma_flat_self(capsys):
    code, out, _ = run(capsys, "bayes", "--strength", "headneck_ctrt",
                       "--stress", "headneck_rt", "--prior", "gamma",
                       "--hyper", "0,0,0,0", "--loss", "self")
    assert code == 0
    rows = {line.split()[0]: line.split()[1] for line in out.strip().splitlines()[1:]}
    assert rows["theta1"] == "77.6963"
    assert rows["theta2"] == "55.4713"
    assert rows["r"] == "0.5834"


def test_bayes_hyper_validation(capsys):
    code, _, err = run(capsys, "bayes", "--strength", "headneck_ctrt",
                       "--stress", "headneck_rt", "--prior", "gamma",
                       "--hyper=-1,0,0,0", "--loss", "self")
    assert code == 2
    assert err.strip()
    code, _, _ = run(capsys, "bayes", "--strength", "headneck_ctrt",
                     "--stress", "headneck_rt", "--prior", "gamma",
                     "--loss", "self")
    assert code == 2
    code, _, _ = run(capsys, "bayes", "--strength", "headneck_ctrt",
                     "--stress", "headneck_rt", "--prior", "jeffrey",
                     "--hyper", "1,1,1,1", "--loss", "self")
    assert code == 2


def test_bayes_approximation_failure_exit_code(capsys):
    code, _, err = run(capsys, "bayes", "--strength", "headneck_ctrt",
                       "--stress", "headneck_rt", "--prior", "gamma",
                       "--hyper", "1e6,0,1e6,0", "--loss", "elf")
    assert code == 3
    assert "approximation" in err.lower()


def test_sample_deterministic(capsys):
    code1, out1, _ = run(capsys, "sample", "--theta", "1", "--n", "5", "--seed", "7")
    code2, out2, _ = run(capsys, "sample", "--theta", "1", "--n", "5", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 5
    assert all(float(v) > 0 for v in out1.split())


def test_sample_to_file_and_validation(capsys, tmp_path):
    p = tmp_path / "draws.txt"
    code, out, _ = run(capsys, "sample", "--theta", "2", "--n", "3",
                       "--seed", "1", "--out", str(p))
    assert code == 0
    assert out == ""
    assert len(p.read_text().strip().splitlines()) == 3
    code, _, err = run(capsys, "sample", "--theta", "2", "--n", "0", "--seed", "1")
    assert code == 2
    assert err.strip()


def test_quantile_round_trip(capsys):
    code, out, _ = run(capsys, "quantile", "--theta", "1", "--p", "0.5")
    assert code == 0
    q = float(out.strip())
    assert abs(cdf(1.0, q) - 0.5) <= 1e-9
    code, _, _ = run(capsys, "quantile", "--theta", "1", "--p", "1.5")
    assert code == 2


def test_simulate_smoke(capsys, tmp_path):
    cfg = tmp_path / "one.cfg"
    cfg.write_text("theta1 = 1\ntheta2 = 2\nn = 15\nm = 20\nseed = 20260822\n")
    out_csv = tmp_path / "res.csv"
    code, out, _ = run(capsys, "simulate", "--config", str(cfg),
                       "--reps", "200", "--out", str(out_csv))
    assert code == 0
    assert "MLE" in out
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0].startswith("theta1,theta2,")
    assert len(lines) == 28
    # averages land near the truth even at smoke scale
    row = [l for l in lines[1:] if ",mle,r," in l][0]
    av = float(row.split(",")[8])
    assert abs(av - 46.0 / 162.0) <= 0.05


def test_simulate_validation(capsys, tmp_path):
    cfg = tmp_path / "one.cfg"
    cfg.write_text("theta1 = 1\ntheta2 = 2\nn = 15\nm = 20\n")
    code, _, err = run(capsys, "simulate", "--config", str(cfg), "--reps", "0")
    assert code == 2
    assert err.strip()
    code, _, _ = run(capsys, "simulate", "--config", str(tmp_path / "nope.cfg"))
    assert code == 2


def test_quantile_json_format(capsys):
    code, out, _ = run(capsys, "quantile", "--theta", "2", "--p", "0.25",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert abs(cdf(2.0, payload["quantile"]) - 0.25) <= 1e-9
