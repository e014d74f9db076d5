"""Command-line front-end.

Subcommands: fit, gof, reliability, bayes, sample, quantile, simulate.
Human tables print 4 decimals to line up with the reference tables; csv
and json formats keep full precision.  Exit codes: 0 success, 2 input
error, 3 numerical/approximation failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .bayes_lindley import ApproximationError, PriorSpec, bayes_r, bayes_theta
from .datasets import BUILTIN_NAMES, load_builtin, load_file
from .distribution import cdf, quantile as dist_quantile, sample as dist_sample
from .gof import compare_models, ecdf_curve
from .mle import mle_theta, sufficient_stats, theta_ci
from .simulation import parse_scenario_file, render_table, run_suite
from .stress_strength import r_ci, reliability

_FORMATS = ("table", "csv", "json")


def _resolve_dataset(spec: str, variant: str):
    if spec in BUILTIN_NAMES:
        return load_builtin(spec, variant)
    return load_file(spec)


def _dataset_flags(p, required=True):
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--data", help="path to a data file")
    group.add_argument("--builtin", choices=BUILTIN_NAMES, help="bundled dataset")
    p.add_argument("--variant", choices=("as_printed", "corrected"),
                   default="corrected", help="bundled-dataset variant")


def _format_flag(p):
    p.add_argument("--format", choices=_FORMATS, default="table",
                   dest="fmt", help="output format")


def _fit_rows(reports):
    return [dataclasses.asdict(r) for r in reports]


def _print_fit(reports, fmt):
    if fmt == "table":
        print("%-18s %12s %12s %12s %12s %10s %5s"
              % ("model", "theta_hat", "loglik", "aic", "bic", "ks", "n"))
        for r in reports:
            print("%-18s %12.4f %12.4f %12.4f %12.4f %10.4f %5d"
                  % (r.model, r.theta_hat, r.loglik, r.aic, r.bic, r.ks, r.n))
    elif fmt == "csv":
        print("model,theta_hat,loglik,aic,bic,ks,n")
        for r in reports:
            print("%s,%r,%r,%r,%r,%r,%d"
                  % (r.model, r.theta_hat, r.loglik, r.aic, r.bic, r.ks, r.n))
    else:
        print(json.dumps(_fit_rows(reports), indent=2))


def _cmd_fit(args) -> int:
    ds = _resolve_dataset(args.data or args.builtin, args.variant)
    _print_fit(compare_models(ds.values), args.fmt)
    return 0


def _cmd_gof(args) -> int:
    ds = _resolve_dataset(args.data or args.builtin, args.variant)
    reports = compare_models(ds.values)
    ild = [r for r in reports if r.model == "inverse_lindley"]
    _print_fit(ild, args.fmt)
    if args.curve:
        grid = sorted(ds.values)
        theta = ild[0].theta_hat
        rows = ecdf_curve(ds.values, grid, lambda x: cdf(theta, x))
        with open(args.curve, "w") as fh:
            fh.write("x,empirical,fitted\n")
            for x, emp, fit in rows:
                fh.write("%r,%r,%r\n" % (x, emp, fit))
    return 0


def _clip01(v: float) -> float:
    return min(1.0, max(0.0, v))


def _print_quantities(rows, fmt, extra=None):
    # rows: list of (name, estimate, ci_low or None, ci_high or None)
    with_ci = any(r[2] is not None for r in rows)
    if fmt == "table":
        if with_ci:
            print("%-8s %12s %12s %12s" % ("quantity", "estimate", "ci_low", "ci_high"))
            for name, est, lo, hi in rows:
                if lo is None:
                    print("%-8s %12.4f" % (name, est))
                else:
                    print("%-8s %12.4f %12.4f %12.4f" % (name, est, lo, hi))
        else:
            print("%-8s %12s" % ("quantity", "estimate"))
            for name, est, _, _ in rows:
                print("%-8s %12.4f" % (name, est))
    elif fmt == "csv":
        if with_ci:
            print("quantity,estimate,ci_low,ci_high")
            for name, est, lo, hi in rows:
                print("%s,%r,%s,%s" % (name, est,
                                       "" if lo is None else repr(lo),
                                       "" if hi is None else repr(hi)))
        else:
            print("quantity,estimate")
            for name, est, _, _ in rows:
                print("%s,%r" % (name, est))
    else:
        payload = dict(extra or {})
        for name, est, lo, hi in rows:
            payload[name] = est
            if lo is not None:
                payload[name + "_ci"] = [lo, hi]
        print(json.dumps(payload, indent=2))


def _cmd_reliability(args) -> int:
    strength = _resolve_dataset(args.strength, args.variant)
    stress = _resolve_dataset(args.stress, args.variant)
    sx = sufficient_stats(strength.values)
    sy = sufficient_stats(stress.values)
    th1 = mle_theta(sx)
    th2 = mle_theta(sy)
    est1 = theta_ci(th1, sx.n, args.level)
    est2 = theta_ci(th2, sy.n, args.level)
    r_hat = reliability(th1, th2)
    lo, hi = r_ci(th1, th2, sx.n, sy.n, args.level)
    rows = [
        ("theta1", th1, est1.ci_low, est1.ci_high),
        ("theta2", th2, est2.ci_low, est2.ci_high),
        ("r", r_hat, _clip01(lo), _clip01(hi)),
    ]
    _print_quantities(rows, args.fmt, extra={"level": args.level})
    return 0


def _parse_hyper(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("--hyper needs four comma-separated values a1,b1,a2,b2")
    return tuple(float(p) for p in parts)


def _cmd_bayes(args) -> int:
    strength = _resolve_dataset(args.strength, args.variant)
    stress = _resolve_dataset(args.stress, args.variant)
    sx = sufficient_stats(strength.values)
    sy = sufficient_stats(stress.values)
    if args.prior == "gamma":
        if args.hyper is None:
            raise ValueError("gamma prior requires --hyper a1,b1,a2,b2")
        prior = PriorSpec("gamma", _parse_hyper(args.hyper))
    else:
        if args.hyper is not None:
            raise ValueError("jeffrey prior takes no --hyper")
        prior = PriorSpec("jeffrey")
    th1 = bayes_theta(sx, 1, prior, args.loss, full_lindley=args.full_lindley)
    th2 = bayes_theta(sy, 2, prior, args.loss, full_lindley=args.full_lindley)
    r_est = bayes_r(sx, sy, prior, args.loss)
    rows = [("theta1", th1, None, None), ("theta2", th2, None, None),
            ("r", r_est, None, None)]
    _print_quantities(rows, args.fmt,
                      extra={"prior": args.prior, "loss": args.loss})
    return 0


def _cmd_sample(args) -> int:
    draws = dist_sample(args.theta, args.n, args.seed)
    text = "\n".join(repr(float(v)) for v in draws) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_quantile(args) -> int:
    q = dist_quantile(args.theta, args.p)
    if args.fmt == "json":
        print(json.dumps({"theta": args.theta, "p": args.p, "quantile": q}))
    elif args.fmt == "csv":
        print("theta,p,quantile")
        print("%r,%r,%r" % (args.theta, args.p, q))
    else:
        print(repr(q))
    return 0


def _cmd_simulate(args) -> int:
    cfgs = parse_scenario_file(args.config)
    if args.reps is not None:
        if args.reps < 1:
            raise ValueError("--reps must be >= 1")
        cfgs = [dataclasses.replace(c, replications=args.reps) for c in cfgs]
    reports = run_suite(cfgs)
    text, csv_text = render_table(reports)
    if args.fmt == "csv":
        sys.stdout.write(csv_text)
    elif args.fmt == "json":
        payload = []
        for rep in reports:
            payload.append({
                "config": dataclasses.asdict(rep.config),
                "av": {"%s.%s" % k: v for k, v in rep.av.items()},
                "mse": {"%s.%s" % k: v for k, v in rep.mse.items()},
                "counts": {"%s.%s" % k: v for k, v in rep.counts.items()},
                "elf_failures": rep.elf_failures,
            })
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="invlindley",
                                  description="Inverse Lindley distribution toolkit")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit and compare the two bundled models")
    _dataset_flags(p)
    _format_flag(p)
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("gof", help="goodness of fit for the inverse Lindley model")
    _dataset_flags(p)
    _format_flag(p)
    p.add_argument("--curve", help="write x,empirical,fitted CSV to this path")
    p.set_defaults(func=_cmd_gof)

    p = sub.add_parser("reliability", help="stress-strength reliability with CIs")
    p.add_argument("--strength", required=True, help="strength dataset (path or builtin name)")
    p.add_argument("--stress", required=True, help="stress dataset (path or builtin name)")
    p.add_argument("--variant", choices=("as_printed", "corrected"), default="corrected")
    p.add_argument("--level", type=float, default=0.95)
    _format_flag(p)
    p.set_defaults(func=_cmd_reliability)

    p = sub.add_parser("bayes", help="Lindley-approximation Bayes estimates")
    p.add_argument("--strength", required=True)
    p.add_argument("--stress", required=True)
    p.add_argument("--variant", choices=("as_printed", "corrected"), default="corrected")
    p.add_argument("--prior", choices=("jeffrey", "gamma"), required=True)
    p.add_argument("--hyper", help="a1,b1,a2,b2 for the gamma prior")
    p.add_argument("--loss", choices=("self", "elf"), required=True)
    p.add_argument("--full-lindley", action="store_true",
                   help="apply the uncorrected expansion under jeffrey/self")
    _format_flag(p)
    p.set_defaults(func=_cmd_bayes)

    p = sub.add_parser("sample", help="draw random variates")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="write one value per line to this path")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("quantile", help="evaluate the quantile function")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    _format_flag(p)
    p.set_defaults(func=_cmd_quantile)

    p = sub.add_parser("simulate", help="run the Monte Carlo study")
    p.add_argument("--config", required=True, help="scenario file")
    p.add_argument("--reps", type=int, help="override replications for all scenarios")
    p.add_argument("--out", help="write the CSV rendering to this path")
    _format_flag(p)
    p.set_defaults(func=_cmd_simulate)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ApproximationError as exc:
        print("approximation failure: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, OSError, ArithmeticError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
