"""Command-line front end.

Exit codes: 0 success (or consistent), 1 input error, 2 inconsistent system
(``check``), 3 no equation solvable alone (``mcs``), 4 t-norm not supported
by ``enumerate``, 5 oracle disagreement (``verify``).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

import numpy as np

from .algebra import DEFAULT_EPS, System, TNormKind, check_consistency
from .chebyshev import ApproximationError, chebyshev_report, greatest_approximation
from .io import TNORM_NAMES, DocumentError, load_csv, load_document
from .oracle import OracleConfig, oracle_distance_bisection, oracle_enumerate
from .subsystems import (
    NoSolvableEquation,
    UnsupportedTNorm,
    canonical_mcs,
    enumerate_consistent_maxmin,
    maximal_consistent_maxmin,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2
EXIT_NO_SOLVABLE = 3
EXIT_UNSUPPORTED = 4
EXIT_DISAGREE = 5

ENV_EPSILON = "FREL_EPSILON"


class InputError(Exception):
    pass


def _num(x) -> float:
    return float(f"{float(x):.10g}")


def _fmt(x) -> str:
    return f"{float(x):.10g}"


def _vec(v) -> list[float]:
    return [_num(x) for x in np.asarray(v).ravel()]


def _fmt_vec(v) -> str:
    return "[" + ", ".join(_fmt(x) for x in np.asarray(v).ravel()) + "]"


def _fmt_set(R) -> str:
    return "{" + ",".join(str(i) for i in R) + "}"


class Reporter:
    def __init__(self, mode: str, out=None):
        self.mode = mode
        self.out = out or sys.stdout
        self.record: dict = {}
        self.lines: list[str] = []

    def add(self, key: str, value, text: Optional[str] = None):
        self.record[key] = value
        if text is not None:
            self.lines.append(text)

    def flush(self):
        if self.mode == "machine":
            self.out.write(json.dumps(self.record) + "\n")
        else:
            self.out.write("\n".join(self.lines) + "\n")


def _load(args) -> System:
    try:
        if args.csv:
            if args.file:
                raise InputError("give either a document file or --csv, not both")
            if not args.tnorm:
                raise InputError("--csv requires --tnorm")
            doc = load_csv(args.csv[0], args.csv[1], args.tnorm)
        else:
            if not args.file:
                raise InputError("missing system document (or --csv A.csv b.csv)")
            doc = load_document(args.file)
        system = doc.to_system()
    except (OSError, DocumentError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if args.tnorm:
        system = system.with_tnorm(TNormKind(args.tnorm))
    return system


def cmd_check(system: System, args, rep: Reporter) -> int:
    res = check_consistency(system, args.epsilon)
    verdict = "consistent" if res.consistent else "inconsistent"
    rep.add("tnorm", system.tnorm.value, f"t-norm: {system.tnorm.value}")
    rep.add("consistent", res.consistent, f"system is {verdict}")
    rep.add("e", _vec(res.e), f"e = {_fmt_vec(res.e)}")
    rep.add("image", _vec(res.image), f"A o e = {_fmt_vec(res.image)}")
    return EXIT_OK if res.consistent else EXIT_INCONSISTENT


def cmd_distance(system: System, args, rep: Reporter) -> int:
    r = chebyshev_report(system, args.epsilon, witness=args.witness)
    rep.add("tnorm", system.tnorm.value, f"t-norm: {system.tnorm.value}")
    rep.add("delta", _num(r.delta), f"Delta = {_fmt(r.delta)}")
    rep.add("row_defects", _vec(r.row_defects))
    for i, d in enumerate(r.row_defects, 1):
        line = f"  row {i}: defect {_fmt(d)}"
        if args.witness:
            line += f"  (argmin j = {r.best_j[i - 1]}, argmax k = {r.best_k[i - 1]})"
        rep.lines.append(line)
    rep.add("nc", list(r.nc), f"N_c = {_fmt_set(r.nc)}")
    if args.witness:
        rep.add("argmin_j", list(r.best_j))
        rep.add("argmax_k", list(r.best_k))
    return EXIT_OK


def cmd_approx(system: System, args, rep: Reporter) -> int:
    res = greatest_approximation(system, args.epsilon)
    rep.add("tnorm", system.tnorm.value, f"t-norm: {system.tnorm.value}")
    rep.add("delta", _num(res.distance), f"Delta = {_fmt(res.distance)}")
    rep.add("approx", _vec(res.approx), f"F(b + Delta) = {_fmt_vec(res.approx)}")
    rep.add("consistent", True, "approximated system is consistent")
    return EXIT_OK


def cmd_mcs(system: System, args, rep: Reporter) -> int:
    try:
        cert = canonical_mcs(system, args.epsilon)
    except NoSolvableEquation as exc:
        rep.add("error", str(exc), f"no consistent subsystem: {exc}")
        return EXIT_NO_SOLVABLE
    rep.add("tnorm", system.tnorm.value, f"t-norm: {system.tnorm.value}")
    rep.add("nc", list(cert.nc), f"N_c = {_fmt_set(cert.nc)}")
    rep.add("delta_nc", _num(cert.delta_nc), f"Delta(N_c) = {_fmt(cert.delta_nc)}")
    rep.add("augmented_defects", {str(k): _num(v) for k, v in cert.augmented_defects.items()})
    for k, v in cert.augmented_defects.items():
        rep.lines.append(f"  Delta(N_c + {{{k}}}) = {_fmt(v)}")
    return EXIT_OK


def cmd_enumerate(system: System, args, rep: Reporter) -> int:
    try:
        family = enumerate_consistent_maxmin(system, args.epsilon)
    except UnsupportedTNorm as exc:
        rep.add("error", str(exc), f"error: {exc}")
        return EXIT_UNSUPPORTED
    rep.add("excluded", list(family.excluded), f"excluded rows: {_fmt_set(family.excluded)}")
    if args.maximal_only:
        sets = family.maximal()
        rep.add("maximal", [list(R) for R in sets], f"{len(sets)} maximal consistent subsystem(s):")
    else:
        sets = sorted(family.sets)
        rep.add("sets", [list(R) for R in sets], f"{len(sets)} consistent subsystem(s):")
    rep.lines.extend("  " + _fmt_set(R) for R in sets)
    return EXIT_OK


def cmd_verify(system: System, args, rep: Reporter) -> int:
    eps = args.epsilon
    cfg = OracleConfig(tolerance=min(args.tolerance, 1e-9))
    analytic = chebyshev_report(system, eps).delta
    bisected = oracle_distance_bisection(system, cfg)
    gap = abs(analytic - bisected)
    ok_delta = gap <= max(args.tolerance, eps)
    rep.add("delta_analytic", _num(analytic), f"analytic Delta  = {_fmt(analytic)}")
    rep.add("delta_bisection", _num(bisected), f"bisection Delta = {_fmt(bisected)}")
    rep.add("delta_agree", ok_delta, f"distance check: {'agree' if ok_delta else 'DISAGREE'} (gap {_fmt(gap)})")
    ok = ok_delta
    if system.tnorm is TNormKind.MIN and system.n <= cfg.max_exhaustive_n:
        fast = enumerate_consistent_maxmin(system, eps)
        slow = oracle_enumerate(system, cfg, eps)
        same = fast.as_set() == slow.as_set()
        maximal_ok = maximal_consistent_maxmin(system, eps) == maximal_consistent_maxmin(
            system, eps, route="augmentation"
        )
        rep.add("family_size", len(fast))
        rep.add(
            "family_agree",
            same,
            f"enumeration check: {'agree' if same else 'DISAGREE'} ({len(fast)} vs {len(slow)} sets)",
        )
        rep.add("maximal_agree", maximal_ok, f"maximal-set routes: {'agree' if maximal_ok else 'DISAGREE'}")
        ok = ok and same and maximal_ok
    else:
        rep.add("family_agree", None, "enumeration check: skipped")
    rep.add("ok", ok)
    return EXIT_OK if ok else EXIT_DISAGREE


COMMANDS = {
    "check": cmd_check,
    "distance": cmd_distance,
    "approx": cmd_approx,
    "mcs": cmd_mcs,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def _add_common(p: argparse.ArgumentParser, defaults: bool):
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--epsilon", type=float, default=d(None), help="equality tolerance (default 1e-9, env FREL_EPSILON)")
    p.add_argument("--output", choices=("text", "machine"), default=d("text"))
    p.add_argument("--tolerance", type=float, default=d(1e-6), help="oracle agreement tolerance for verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frel", description="Analyse systems of max-T fuzzy relational equations.")
    _add_common(parser, True)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "greatest-solution consistency test",
        "distance": "analytic Chebyshev distance, row defects and N_c",
        "approx": "greatest Chebyshev approximation of b",
        "mcs": "canonical maximal consistent subsystem",
        "enumerate": "all consistent subsystems of a max-min system",
        "verify": "cross-check analytic results against brute-force oracles",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("file", nargs="?", help="JSON document with fields tnorm, A, b")
        p.add_argument("--csv", nargs=2, metavar=("A_CSV", "B_CSV"))
        p.add_argument("--tnorm", choices=TNORM_NAMES, help="t-norm (required with --csv, overrides the document)")
        _add_common(p, False)
        if name == "distance":
            p.add_argument("--witness", action="store_true", help="also report argmin j and argmax k per row")
        if name == "enumerate":
            p.add_argument("--maximal-only", action="store_true")
    return parser


def _resolve_epsilon(value: Optional[float]) -> float:
    if value is None:
        env = os.environ.get(ENV_EPSILON)
        if env is None:
            return DEFAULT_EPS
        try:
            value = float(env)
        except ValueError:
            raise InputError(f"{ENV_EPSILON}={env!r} is not a number") from None
    if not value >= 0:
        raise InputError(f"epsilon must be non-negative, got {value!r}")
    return value


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Reporter(args.output, out)
    try:
        args.epsilon = _resolve_epsilon(args.epsilon)
        if not args.tolerance > 0:
            raise InputError("tolerance must be positive")
        system = _load(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        code = COMMANDS[args.command](system, args, rep)
    except ApproximationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rep.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
