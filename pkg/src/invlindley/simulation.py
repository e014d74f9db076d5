"""Monte Carlo harness for the estimator study.

For a configured (theta1, theta2, n, m) scenario the harness draws
``replications`` independent sample pairs, computes the MLE and every
prior/loss Bayes estimator of theta1, theta2 and R, and aggregates
averages (AV) and mean squared errors (MSE) against the true values.

Determinism: replication r draws its uniforms from an independent Philox
stream keyed by seed XOR r, and every estimator row is computed
independently, so results are identical for any thread count and any
execution order.  The backend (compiled vs pure numpy) is chosen by the
INVLINDLEY_JIT environment flag at call time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from ._jit import jit_enabled
from ._backends import simulate_numpy
from .bayes_lindley import PriorSpec, elicit_gamma_hyper
from .stress_strength import reliability

__all__ = [
    "ESTIMATORS", "TARGETS", "COLUMNS", "ScenarioConfig", "SimulationReport",
    "run_scenario", "run_suite", "render_table", "parse_table_csv",
    "parse_scenario_file",
]

ESTIMATORS = ("mle",
              "jeffrey_self", "jeffrey_elf",
              "gamma1_self", "gamma1_elf",
              "gamma2_self", "gamma2_elf",
              "gamma3_self", "gamma3_elf")
TARGETS = ("theta1", "theta2", "r")
# column c of the per-replication matrix holds COLUMNS[c]
COLUMNS = tuple((e, t) for e in ESTIMATORS for t in TARGETS)

_DISPLAY = {"mle": "MLE",
            "jeffrey_self": "Jeffrey-self", "jeffrey_elf": "Jeffrey-elf",
            "gamma1_self": "Gamma1-self", "gamma1_elf": "Gamma1-elf",
            "gamma2_self": "Gamma2-self", "gamma2_elf": "Gamma2-elf",
            "gamma3_self": "Gamma3-self", "gamma3_elf": "Gamma3-elf"}

_CSV_HEADER = "theta1,theta2,n,m,replications,seed,estimator,target,av,mse,count"


@dataclass(frozen=True)
class ScenarioConfig:
    """One simulation cell: true parameters, sample sizes, replication
    count, base seed, and the two elicited gamma-prior variances."""
    theta1: float
    theta2: float
    n: int
    m: int
    replications: int = 5000
    seed: int = 0
    prior_variances: Tuple[float, float] = (0.5, 10.0)

    def __post_init__(self):
        object.__setattr__(self, "theta1", float(self.theta1))
        object.__setattr__(self, "theta2", float(self.theta2))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "replications", int(self.replications))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "prior_variances",
                           tuple(float(v) for v in self.prior_variances))
        if not (self.theta1 > 0 and self.theta2 > 0):
            raise ValueError("true parameters must be positive")
        if self.n < 2 or self.m < 2:
            raise ValueError("sample sizes must be >= 2")
        if self.replications < 1:
            raise ValueError("replications must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if len(self.prior_variances) != 2 or not all(v > 0 for v in self.prior_variances):
            raise ValueError("prior_variances must be two positive numbers")

    def priors(self):
        """Jeffrey, the all-zero gamma, and two elicited gamma priors whose
        means sit at the true parameters with the configured variances."""
        v_small, v_large = self.prior_variances
        return [
            PriorSpec("jeffrey"),
            PriorSpec("gamma", (0.0, 0.0, 0.0, 0.0)),
            PriorSpec("gamma", (*elicit_gamma_hyper(self.theta1, v_small),
                                *elicit_gamma_hyper(self.theta2, v_small))),
            PriorSpec("gamma", (*elicit_gamma_hyper(self.theta1, v_large),
                                *elicit_gamma_hyper(self.theta2, v_large))),
        ]


@dataclass(frozen=True)
class SimulationReport:
    config: ScenarioConfig
    av: Dict[Tuple[str, str], float]
    mse: Dict[Tuple[str, str], float]
    counts: Dict[Tuple[str, str], int]
    elf_failures: int


def _uniform_blocks(replications: int, seed: int, width: int) -> np.ndarray:
    """Pre-generate the (reps, 4, width) uniforms, one stream per
    replication, identical for every backend and thread count."""
    u = np.empty((replications, 4, width))
    for r in range(replications):
        gen = np.random.Generator(np.random.Philox(key=seed ^ r))
        u[r] = gen.random((4, width))
    return u


def _hyper_arrays(cfg: ScenarioConfig):
    ga1 = np.zeros(4)
    gb1 = np.zeros(4)
    ga2 = np.zeros(4)
    gb2 = np.zeros(4)
    for k, prior in enumerate(cfg.priors()):
        if prior.kind == "gamma":
            ga1[k], gb1[k], ga2[k], gb2[k] = prior.hyper
    return ga1, gb1, ga2, gb2


def _apply_thread_limit():
    import numba
    cap = numba.config.NUMBA_NUM_THREADS
    raw = os.environ.get("INVLINDLEY_THREADS", "").strip()
    want = cap
    if raw:
        v = int(raw)
        if v > 0:
            want = min(v, cap)
    numba.set_num_threads(want)


def estimate_rows(cfg: ScenarioConfig) -> np.ndarray:
    """The raw (replications, 27) estimator matrix for a scenario."""
    u = _uniform_blocks(cfg.replications, cfg.seed, cfg.n + cfg.m)
    ga1, gb1, ga2, gb2 = _hyper_arrays(cfg)
    if jit_enabled():
        from ._backend_numba import simulate_numba
        _apply_thread_limit()
        return simulate_numba(u, cfg.n, cfg.m, cfg.theta1, cfg.theta2,
                              ga1, gb1, ga2, gb2)
    return simulate_numpy(u, cfg.n, cfg.m, cfg.theta1, cfg.theta2,
                          ga1, gb1, ga2, gb2)


def run_scenario(cfg: ScenarioConfig) -> SimulationReport:
    """Simulate one scenario and aggregate AV/MSE per estimator and target.

    Entropy-loss cells with a failed (non-positive) bracket are NaN in the
    raw matrix; they are excluded from that cell's AV/MSE and tallied in
    ``elf_failures``.
    """
    rows = estimate_rows(cfg)
    truth = {"theta1": cfg.theta1, "theta2": cfg.theta2,
             "r": reliability(cfg.theta1, cfg.theta2)}
    av, mse, counts = {}, {}, {}
    failures = 0
    for ci, key in enumerate(COLUMNS):
        col = rows[:, ci]
        ok = ~np.isnan(col)
        k = int(ok.sum())
        counts[key] = k
        failures += cfg.replications - k
        if k:
            good = col[ok]
            av[key] = float(np.mean(good))
            err = good - truth[key[1]]
            mse[key] = float(np.mean(err * err))
        else:
            av[key] = float("nan")
            mse[key] = float("nan")
    return SimulationReport(config=cfg, av=av, mse=mse, counts=counts,
                            elf_failures=failures)


def run_suite(cfgs) -> list:
    cfgs = list(cfgs)
    if not cfgs:
        raise ValueError("scenario list must be non-empty")
    return [run_scenario(c) for c in cfgs]


# ---------------------------------------------------------------------------
# rendering

def render_table(reports):
    """Text table (AV over MSE, one column per estimator) plus a
    full-precision CSV.  Returns (text, csv_text)."""
    if isinstance(reports, SimulationReport):
        reports = [reports]
    reports = list(reports)
    if not reports:
        raise ValueError("no reports to render")
    lines = []
    csv_lines = [_CSV_HEADER]
    for rep in reports:
        cfg = rep.config
        lines.append("scenario theta1=%g theta2=%g n=%d m=%d replications=%d "
                     "seed=%d elf_failures=%d"
                     % (cfg.theta1, cfg.theta2, cfg.n, cfg.m,
                        cfg.replications, cfg.seed, rep.elf_failures))
        lines.append("%-11s" % "" + "".join("%13s" % _DISPLAY[e] for e in ESTIMATORS))
        for t in TARGETS:
            av_cells = "".join("%13.4f" % rep.av[(e, t)] for e in ESTIMATORS)
            mse_cells = "".join("%13.4f" % rep.mse[(e, t)] for e in ESTIMATORS)
            lines.append("%-7s %-3s%s" % (t, "AV", av_cells))
            lines.append("%-7s %-3s%s" % ("", "MSE", mse_cells))
        lines.append("")
        for e in ESTIMATORS:
            for t in TARGETS:
                csv_lines.append("%r,%r,%d,%d,%d,%d,%s,%s,%r,%r,%d"
                                 % (cfg.theta1, cfg.theta2, cfg.n, cfg.m,
                                    cfg.replications, cfg.seed, e, t,
                                    rep.av[(e, t)], rep.mse[(e, t)],
                                    rep.counts[(e, t)]))
    return "\n".join(lines), "\n".join(csv_lines) + "\n"


def parse_table_csv(csv_text: str):
    """Parse render_table's CSV back into row dictionaries."""
    rows = []
    lines = [ln for ln in csv_text.strip().splitlines() if ln]
    if not lines or lines[0] != _CSV_HEADER:
        raise ValueError("unrecognized CSV header")
    names = _CSV_HEADER.split(",")
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != len(names):
            raise ValueError("malformed CSV row: %r" % ln)
        row = dict(zip(names, parts))
        for key in ("theta1", "theta2", "av", "mse"):
            row[key] = float(row[key])
        for key in ("n", "m", "replications", "seed", "count"):
            row[key] = int(row[key])
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# scenario files

_SCENARIO_KEYS = ("theta1", "theta2", "n", "m", "replications", "seed",
                  "prior_variances")


def parse_scenario_file(path):
    """Read scenario blocks from a key = value text file.

    Blocks are separated by blank lines; '#' starts a comment.  Keys:
    theta1, theta2, n, m (required), replications, seed, prior_variances
    (comma-separated pair).  Returns a list of ScenarioConfig.
    """
    blocks = [{}]
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                if blocks[-1]:
                    blocks.append({})
                continue
            if "=" not in line:
                raise ValueError("%s, line %d: expected key = value" % (path, lineno))
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in _SCENARIO_KEYS:
                raise ValueError("%s, line %d: unknown key %r" % (path, lineno, key))
            blocks[-1][key] = (lineno, value)
    configs = []
    for block in blocks:
        if not block:
            continue
        kwargs = {}
        for key, (lineno, value) in block.items():
            try:
                if key in ("n", "m", "replications", "seed"):
                    kwargs[key] = int(value)
                elif key == "prior_variances":
                    kwargs[key] = tuple(float(v) for v in value.split(","))
                else:
                    kwargs[key] = float(value)
            except ValueError:
                raise ValueError("%s, line %d: bad value %r for %s"
                                 % (path, lineno, value, key)) from None
        missing = [k for k in ("theta1", "theta2", "n", "m") if k not in kwargs]
        if missing:
            raise ValueError("%s: scenario block missing %s" % (path, ", ".join(missing)))
        configs.append(ScenarioConfig(**kwargs))
    if not configs:
        raise ValueError("%s: no scenarios found" % path)
    return configs
