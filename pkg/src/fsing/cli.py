"""Command line front end: ``fsing <command> --p P --n N --f POLY [options]``.

Every command prints a deterministic report, either ``key: value`` text or
JSON tagged with the schema ``fsing-report/1``.  Exit codes: 0 success,
1 a reproduction check failed, 2 parse/validation error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import __version__
from .ffpoly import Poly, PolySyntaxError, parse_poly
from .fpurity import (INFINITE, DeltaStatus, DeltaUndeterminedError, compute_delta,
                      compute_me, corollary_threshold, e0, injectivity_bound,
                      isolated_non_f_pure_point)
from .frobenius import fedder_not_f_pure_at_m, non_f_pure_ideal_estimate, test_ideal
from .gradedla import Ideal
from .limits import ResourceLimitError, current_limits, resource_limits
from .localcoh import (frobenius_kernel_dim_colon, frobenius_kernel_dim_direct,
                       hn_piece_dim, witness_non_injectivity)

SCHEMA = "fsing-report/1"

EXAMPLE_1 = "x0^2*x1^2 + x1^2*x2^2 + x2^2*x0^2"
EXAMPLE_2 = ("x0^2*x1*x2*x3*x4 + x0*x1^2*x2*x3*x4 + x0*x1*x2^2*x3*x4"
             " + x0*x1*x2*x3^2*x4 + x0*x1*x2*x3*x4^2 + x5^6")

COMMANDS = ("test-ideal", "fedder", "me", "delta", "isolated", "injectivity",
            "hn-dims", "kernel-dims", "witness", "sigma")
REPRO = ("repro-example-1", "repro-example-2")


class UsageError(ValueError):
    pass


def _exact(value):
    if value == INFINITE:
        return "infinity"
    return value


def _gens(ideal: Ideal) -> list[str]:
    return [str(g) for g in ideal.sorted_generators()]


def parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"window must look like LO..HI, got {text!r}") from None
    if lo > hi:
        raise UsageError("window LO must not exceed HI")
    return lo, hi


# --------------------------------------------------------------------------
# commands

def _cmd_test_ideal(f, opts):
    tau = test_ideal(f, opts["e"])
    return {"e": opts["e"], "tau": _gens(tau), "unit": tau.is_unit()}


def _cmd_fedder(f, opts):
    not_pure = fedder_not_f_pure_at_m(f)
    return {"fPureAtM": not not_pure, "fedderMember": not_pure}


def _me_dict(rep):
    return {"e": rep.e, "Me": _exact(rep.me), "normalized": rep.normalized,
            "witness": None if rep.witness is None else str(rep.witness)}


def _cmd_me(f, opts):
    tau = test_ideal(f, 1)
    start = e0(f, tau)
    e = opts["e"]
    if e < start:
        raise UsageError(f"--e must be at least e_0 = {start}")
    return {"e0": start, **_me_dict(compute_me(f, e, tau))}


def _delta_dict(rep):
    return {"delta": rep.delta, "status": rep.status.value, "eUsed": rep.e_used,
            "ellMin": _exact(rep.ell_min),
            "sequence": [[e, v] for e, v in rep.sequence],
            "witnesses": {str(r.e): None if r.witness is None else str(r.witness)
                          for r in rep.me_reports},
            "note": rep.note}


def _cmd_delta(f, opts):
    return _delta_dict(compute_delta(f, opts["e_max"]))


def _cmd_isolated(f, opts):
    v = isolated_non_f_pure_point(f)
    return {"fPureAtM": v.f_pure_at_m, "isolated": v.isolated, "ellMin": _exact(v.ell_min)}


def _cmd_injectivity(f, opts):
    rep = compute_delta(f, opts["e_max"])
    try:
        bound = injectivity_bound(f, report=rep)
    except DeltaUndeterminedError:
        return {"bound": None, "injectiveBelow": None, "deltaStatus": rep.status.value,
                "note": rep.note or "delta undetermined"}
    n = f.nvars - 1
    return {"bound": bound, "injectiveBelow": bound, "injectiveUpTo": bound - 1,
            "delta": rep.delta, "deltaStatus": rep.status.value,
            "corollaryThreshold": corollary_threshold(n, f.degree())}


def _window(f, opts):
    if opts["window"] is not None:
        return opts["window"]
    d = f.degree()
    return d - 11, d


def _cmd_hn_dims(f, opts):
    lo, hi = _window(f, opts)
    return {"window": [lo, hi],
            "dims": [[t, hn_piece_dim(f, t)] for t in range(lo, hi + 1)]}


def _cmd_kernel_dims(f, opts):
    lo, hi = _window(f, opts)
    tau = test_ideal(f, 1)
    rows = []
    for t in range(lo, hi + 1):
        direct = frobenius_kernel_dim_direct(f, t)
        colon = frobenius_kernel_dim_colon(f, t, tau)
        rows.append({"t": t, "hnDim": hn_piece_dim(f, t), "direct": direct,
                     "colon": colon, "agree": direct == colon})
    return {"window": [lo, hi], "kernels": rows}


def _cmd_witness(f, opts):
    tau = test_ideal(f, 1)
    start = e0(f, tau)
    e = max(opts["e"], start)
    alpha, t = witness_non_injectivity(f, e, tau)
    return {"e": e, "alpha": str(alpha), "alphaDegree": alpha.degree, "degree": t}


def _cmd_sigma(f, opts):
    est = non_f_pure_ideal_estimate(f, opts["e_max"])
    return {"sigma": _gens(est.ideal), "status": est.status.value,
            "levels": [_gens(tau) for tau in est.levels], "guardHit": est.guard_hit}


HANDLERS = {
    "test-ideal": _cmd_test_ideal, "fedder": _cmd_fedder, "me": _cmd_me,
    "delta": _cmd_delta, "isolated": _cmd_isolated, "injectivity": _cmd_injectivity,
    "hn-dims": _cmd_hn_dims, "kernel-dims": _cmd_kernel_dims, "witness": _cmd_witness,
    "sigma": _cmd_sigma,
}


# --------------------------------------------------------------------------
# reproductions

def _check(checks, name, expected, computed):
    checks.append({"name": name, "expected": expected, "computed": computed,
                   "ok": expected == computed})


def reproduce_example_1(p: int = 3, e_max: int = 4) -> dict[str, Any]:
    if p <= 2:
        raise UsageError("example 1 needs characteristic > 2")
    f = parse_poly(EXAMPLE_1, 2, p)
    tau = test_ideal(f, 1)
    verdict = isolated_non_f_pure_point(f, tau)
    delta = compute_delta(f, e_max, tau)
    checks: list[dict] = []
    _check(checks, "tau", ["x0", "x1", "x2"], _gens(tau))
    _check(checks, "isolated", True, verdict.isolated)
    _check(checks, "delta", -3, delta.delta)
    _check(checks, "deltaStatus", DeltaStatus.CERTIFIED.value, delta.status.value)
    bound = injectivity_bound(f, report=delta) if delta.delta is not None else None
    _check(checks, "injectiveUpTo", 0, None if bound is None else bound - 1)
    _check(checks, "h2dim1", 1, hn_piece_dim(f, 1))
    _check(checks, "h2dimGe2", [0, 0, 0], [hn_piece_dim(f, t) for t in (2, 3, 4)])
    _check(checks, "frobeniusOnDeg1", "zero",
           "zero" if frobenius_kernel_dim_direct(f, 1) == hn_piece_dim(f, 1) else "nonzero")
    _check(checks, "kernelDimsUpTo0", [0] * 9,
           [frobenius_kernel_dim_direct(f, t) for t in range(-8, 1)])
    return {"example": 1, "p": p, "f": str(f), "checks": checks,
            "ok": all(c["ok"] for c in checks)}


def reproduce_example_2(e_max: int = 2) -> dict[str, Any]:
    f = parse_poly(EXAMPLE_2, 5, 2)
    tau = test_ideal(f, 1)
    delta = compute_delta(f, max(e_max, 2), tau)
    seq = dict(delta.sequence)
    me = {r.e: r.me for r in delta.me_reports}
    checks: list[dict] = []
    _check(checks, "tau", ["x0", "x1", "x2", "x3", "x4", "x5^3"], _gens(tau))
    _check(checks, "M1", 5, me.get(1))
    _check(checks, "M2", 16, me.get(2))
    _check(checks, "normalized", [-7, -8], [seq.get(1), seq.get(2)])
    _check(checks, "ellMin", 3, _exact(delta.ell_min))
    _check(checks, "delta", -8, delta.delta)
    _check(checks, "deltaStatus", DeltaStatus.CERTIFIED.value, delta.status.value)
    return {"example": 2, "p": 2, "f": str(f), "checks": checks,
            "ok": all(c["ok"] for c in checks)}


# --------------------------------------------------------------------------
# plumbing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--max-dim", type=int, default=None,
                        help="resource guard on vector space sizes (env FSING_MAX_DIM)")
    common.add_argument("--e-max", type=int, default=None)

    job = argparse.ArgumentParser(add_help=False)
    job.add_argument("--p", type=int, required=True, help="prime characteristic")
    job.add_argument("--n", type=int, required=True, help="variables are x0..xn")
    src = job.add_mutually_exclusive_group(required=True)
    src.add_argument("--f", help="homogeneous polynomial, e.g. 'x0^2*x1 + x1^3'")
    src.add_argument("--f-file", help="file holding the polynomial")
    job.add_argument("--e", type=int, default=1, help="level for test-ideal, me, witness")
    job.add_argument("--window", default=None, help="degree window LO..HI")

    parser = argparse.ArgumentParser(prog="fsing", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"fsing {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common, job])
    ex1 = sub.add_parser("repro-example-1", parents=[common])
    ex1.add_argument("--p", type=int, default=3)
    sub.add_parser("repro-example-2", parents=[common])
    return parser


def _options(args) -> dict[str, Any]:
    opts = {"e_max": args.e_max if args.e_max is not None else 4,
            "max_dim": args.max_dim}
    if opts["e_max"] < 1:
        raise UsageError("--e-max must be positive")
    if hasattr(args, "window"):
        opts["window"] = parse_window(args.window) if args.window else None
        opts["e"] = args.e
        if args.e < 1:
            raise UsageError("--e must be at least 1")
    return opts


def _load_poly(args) -> Poly:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    text = args.f
    if text is None:
        with open(args.f_file) as fh:
            text = fh.read()
    f = parse_poly(text, args.n, args.p)
    if f.is_zero() or not f.is_homogeneous():
        raise UsageError("f must be a nonzero homogeneous polynomial")
    if f.degree() < 1:
        raise UsageError("f must have positive degree")
    return f


def run_job(args) -> tuple[dict[str, Any], int]:
    """Run a parsed command line; returns ``(report, exit_code)``."""
    report: dict[str, Any] = {"schema": SCHEMA, "command": args.command}
    try:
        opts = _options(args)
        max_dim = opts["max_dim"]
        if max_dim is None and os.environ.get("FSING_MAX_DIM"):
            max_dim = int(os.environ["FSING_MAX_DIM"])
        limits = {"max_dim": max_dim} if max_dim is not None else {}
        with resource_limits(**limits):
            opts["max_dim"] = current_limits().max_dim
            if args.command in REPRO:
                if args.command == "repro-example-2" and args.e_max is None:
                    opts["e_max"] = 2
                report["input"] = {"options": {"eMax": opts["e_max"],
                                               "maxDim": opts["max_dim"]}}
                if args.command == "repro-example-1":
                    report["input"]["p"] = args.p
                    result = reproduce_example_1(args.p, opts["e_max"])
                else:
                    result = reproduce_example_2(opts["e_max"])
                report["result"] = result
                return report, 0 if result["ok"] else 1
            f = _load_poly(args)
            report["input"] = {
                "p": args.p, "n": args.n, "f": str(f), "degree": f.degree(),
                "options": {"eMax": opts["e_max"], "e": opts["e"],
                            "window": list(opts["window"]) if opts["window"] else None,
                            "maxDim": opts["max_dim"]}}
            report["result"] = HANDLERS[args.command](f, opts)
            return report, 0
    except ResourceLimitError as exc:
        report["error"] = {"type": "ResourceLimit", "message": str(exc)}
        return report, 3
    except (PolySyntaxError, UsageError, ValueError, OSError) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return report, 2


def _text(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines += _text(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    report, code = run_job(args)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        out = sys.stdout if code in (0, 1) else sys.stderr
        print("\n".join(_text(report)), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
