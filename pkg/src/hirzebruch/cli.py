"""Command line front end.

Divisors are given as ``a,b`` in the basis {C0, f0}.  Exit status is 0 on
success, 1 on a domain error and 2 on a usage error.  With ``--json`` a single
envelope ``{command, inputs, result, status, error_message}`` is written to
stdout; rationals appear as ``{"num": .., "den": ..}``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any

from .bundles import (
    ExtensionBundle,
    Splitting,
    canonical_invariants,
    chern_from_extension,
    require_canonical_presentation,
)
from .classification import StabilityReport, classify_stable
from .cohomology import cohomology_table
from .errors import HirzebruchError, UnsupportedBundle
from .picard import DivisorClass, Surface, intersect, is_ample, is_effective
from .stability import brute_force_stability, stable_chamber, stable_for_some_polarization, wall


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        # let "-1,2" through as a value rather than an unknown option
        self._negative_number_matcher = re.compile(r"^-\d+(,-?\d+)?$")


def _divisor(text: str) -> DivisorClass:
    try:
        return DivisorClass.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a divisor 'a,b', got {text!r}") from None


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def to_json(obj: Any) -> Any:
    if isinstance(obj, DivisorClass):
        return {"a": obj.a, "b": obj.b}
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    return obj


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


# Each handler returns (result payload, human-readable text).


def _run_divisor(args: argparse.Namespace) -> tuple[dict, str]:
    s = Surface(args.e)
    if args.intersect:
        d1, d2 = args.intersect
        n = intersect(s, d1, d2)
        return {"intersection": n}, str(n)
    if args.ample:
        flag = is_ample(s, args.ample)
        return {"ample": flag}, _bool(flag)
    if args.effective:
        flag = is_effective(args.effective)
        return {"effective": flag}, _bool(flag)
    t = cohomology_table(s, args.cohomology)
    result = {"h0": t.h0, "h1": t.h1, "h2": t.h2, "chi": t.euler}
    return result, " ".join(f"{k}={v}" for k, v in result.items())


def _bundle(args: argparse.Namespace) -> ExtensionBundle:
    splitting = Splitting.SPLIT if args.split else Splitting.NON_SPLIT
    return ExtensionBundle(Surface(args.e), args.sub, args.quot, args.deg_y, splitting)


def _run_bundle(args: argparse.Namespace) -> tuple[dict, str]:
    if args.action == "invariants":
        require_canonical_presentation(args.sub, args.quot)
    bundle = _bundle(args)
    if args.action == "chern":
        ch = chern_from_extension(bundle)
        return {"c1": ch.c1, "c2": ch.c2}, f"c1={ch.c1} c2={ch.c2}"
    inv = canonical_invariants(bundle)
    result = {"d": inv.d, "d_prime": inv.d_prime, "r": inv.r, "s": inv.s, "deg_y": inv.deg_y}
    return result, f"d={inv.d} d'={inv.d_prime} r={inv.r} s={inv.s} deg_y={inv.deg_y}"


def _run_stability(args: argparse.Namespace) -> tuple[dict, str]:
    if args.action == "criterion":
        require_canonical_presentation(args.sub, args.quot)
    bundle = _bundle(args)
    c1 = chern_from_extension(bundle).c1
    if args.action == "criterion":
        inv = canonical_invariants(bundle)
        stable = stable_for_some_polarization(inv, c1.b, bundle.splitting)
        result = {"stable_for_some_h": stable, "two_r": 2 * inv.r, "beta": c1.b, "split": bundle.is_split}
        if stable:
            text = f"stable for some polarization (2r={2 * inv.r} < beta={c1.b})"
        elif bundle.is_split:
            text = "not stable (extension splits)"
        else:
            text = f"not stable (2r={2 * inv.r} >= beta={c1.b})"
        return result, text
    if args.action == "chamber":
        if bundle.is_split or bundle.deg_y:
            raise UnsupportedBundle("chambers are only derived for non-split extensions with Y empty")
        w = wall(bundle.sub, c1)
        region = stable_chamber(bundle.surface, w)
        result = {"zeta": w.zeta, "u": region.u, "v": region.v, "chamber": region.human_readable}
        return result, f"zeta={w.zeta}\nchamber: {region.human_readable}"
    verdict = brute_force_stability(bundle, args.H, exhaustive=args.exhaustive, window=args.window)
    result = {
        "outcome": verdict.outcome.value,
        "mu": verdict.mu,
        "witness": verdict.witness,
        "candidates": [{"divisor": d, "degree": deg} for d, deg in verdict.candidates],
    }
    lines = [verdict.outcome.value, f"mu={_fmt(verdict.mu)}"]
    lines += [f"candidate {d} degree {deg}" for d, deg in verdict.candidates]
    if verdict.witness is not None:
        lines.append(f"witness {verdict.witness}")
    return result, "\n".join(lines)


def _report_json(rep: StabilityReport) -> dict:
    inv = rep.invariants
    return {
        "label": rep.label,
        "e": rep.surface.e,
        "sub": rep.bundle.sub,
        "quotient": rep.bundle.quotient,
        "c1": rep.chern.c1,
        "c2": rep.chern.c2,
        "invariants": {"d": inv.d, "d_prime": inv.d_prime, "r": inv.r, "s": inv.s, "deg_y": inv.deg_y},
        "ext1": rep.ext1,
        "stable_for_some_h": rep.stable_for_some_h,
        "chamber": rep.chamber.human_readable if rep.chamber else None,
    }


def _report_text(rep: StabilityReport) -> str:
    inv = rep.invariants
    return (
        f"{rep.label}: e={rep.surface.e} sub={rep.bundle.sub} quot={rep.bundle.quotient} "
        f"c1={rep.chern.c1} c2={rep.chern.c2} d={inv.d} d'={inv.d_prime} r={inv.r} s={inv.s} "
        f"ext1={rep.ext1} chamber: {rep.chamber}"
    )


def _run_classify(args: argparse.Namespace) -> tuple[dict, str]:
    reports = classify_stable(args.c2_max, args.e)
    lines = [f"{len(reports)} stable case(s)"] + [_report_text(r) for r in reports]
    return {"count": len(reports), "reports": [_report_json(r) for r in reports]}, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    json_flag = _Parser(add_help=False)
    json_flag.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                           help="emit one JSON envelope on stdout")

    parser = _Parser(prog="hirzebruch", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", default=False,
                        help="emit one JSON envelope on stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("divisor", parents=[json_flag], help="intersection numbers, ampleness, cohomology")
    p.add_argument("--e", type=_non_negative, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--intersect", nargs=2, type=_divisor, metavar="D")
    group.add_argument("--ample", type=_divisor, metavar="D")
    group.add_argument("--effective", type=_divisor, metavar="D")
    group.add_argument("--cohomology", type=_divisor, metavar="D")
    p.set_defaults(run=_run_divisor)

    def extension_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--e", type=_non_negative, required=True)
        p.add_argument("--sub", type=_divisor, required=True)
        p.add_argument("--quot", type=_divisor, required=True)
        p.add_argument("--deg-y", type=_non_negative, default=0)
        p.add_argument("--split", action="store_true", help="the extension splits")

    p = sub.add_parser("bundle", parents=[json_flag], help="Chern classes and invariants (d, d', r, s)")
    extension_args(p)
    p.add_argument("action", choices=["chern", "invariants"])
    p.set_defaults(run=_run_bundle)

    p = sub.add_parser("stability", parents=[json_flag], help="stability criterion, chamber, direct check")
    extension_args(p)
    actions = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    actions.add_parser("criterion", parents=[json_flag])
    actions.add_parser("chamber", parents=[json_flag])
    verify = actions.add_parser("verify", parents=[json_flag])
    verify.add_argument("--H", type=_divisor, required=True, help="ample polarization a,b")
    verify.add_argument("--exhaustive", action="store_true", help="also sweep below the corner candidates")
    verify.add_argument("--window", type=_non_negative, default=10)
    p.set_defaults(run=_run_stability)

    p = sub.add_parser("classify", parents=[json_flag], help="stable ample bundles with small c2")
    p.add_argument("--c2-max", type=int, required=True)
    p.add_argument("--e", type=_non_negative, default=None)
    p.set_defaults(run=_run_classify)
    return parser


def _inputs(args: argparse.Namespace) -> dict:
    skip = {"run", "json", "command"}
    return {k: to_json(v) for k, v in vars(args).items() if k not in skip and v is not None}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    envelope: dict[str, Any] = {"command": args.command, "inputs": _inputs(args)}
    try:
        result, text = args.run(args)
    except HirzebruchError as exc:
        message = f"{type(exc).__name__}: {exc}"
        print(f"error: {message}", file=sys.stderr)
        if args.json:
            envelope.update(result=None, status="error", error_message=message)
            print(json.dumps(envelope))
        return 1
    if args.json:
        envelope.update(result=to_json(result), status="ok", error_message=None)
        print(json.dumps(envelope))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
