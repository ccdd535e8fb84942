"""Command-line front end.

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .decompose import SHIFTS, SHIFT_UNIT, SORTED_FIRST_THREE, STRATEGIES, decompose_recursive
from .enumeration import enumerate_split_models, format_point
from .errors import InvalidPrimeSet, MissingPrimeTwo, ShafdecError
from .exactmath import Poly, PrimeSet, format_rational
from .fiberprod import fiber_genus
from .hypermodel import (
    PointedModel,
    complete_the_square,
    good_reduction_outside,
    reduction_bijection_check,
    weierstrass_points,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _primes(text: str) -> PrimeSet:
    try:
        return PrimeSet.parse(text)
    except InvalidPrimeSet as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--json", nargs="?", const="-", default=None, metavar="OUT",
        help="machine-readable output, to OUT or standard output",
    )
    p.add_argument("--pretty", action="store_true", help="human-readable output (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shafdec", description="Hyperelliptic models, good reduction and fiber-product decompositions over Z[1/S].")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="discriminant, reduction report and Weierstrass points")
    p.add_argument("--model", required=True, help="model JSON file ('-' for stdin)")
    p.add_argument("--primes", required=True, type=_primes)
    _add_output(p)

    p = sub.add_parser("decompose", help="recursive reversal/split tree down to genus 1")
    p.add_argument("--model", required=True)
    p.add_argument("--primes", required=True, type=_primes)
    p.add_argument("--strategy", choices=STRATEGIES, default=SORTED_FIRST_THREE)
    p.add_argument("--shift", choices=SHIFTS, default=SHIFT_UNIT)
    _add_output(p)

    p = sub.add_parser("fiber-genus", help="genus of y^2=R1 x_P1 y^2=R2")
    p.add_argument("R1", help="JSON array of rationals, ascending degree")
    p.add_argument("R2")
    _add_output(p)

    p = sub.add_parser("enumerate", help="split model classes with S-unit discriminant")
    p.add_argument("--genus", required=True, type=_nonneg)
    p.add_argument("--primes", required=True, type=_primes)
    p.add_argument("--bound", required=True, type=_nonneg)
    _add_output(p)

    p = sub.add_parser("reduce", help="does reduction mod p biject Weierstrass points?")
    p.add_argument("--model", required=True)
    p.add_argument("--prime", required=True, type=int)
    _add_output(p)
    return parser


def _load_model(path: str) -> PointedModel:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"--model: cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--model: invalid JSON in {path}: {exc}") from None
    if isinstance(data, dict) and "model" in data and "genus" not in data:
        data = data["model"]
    return PointedModel.from_json(data)


def _load_poly(text: str, flag: str) -> Poly:
    try:
        data = json.loads(text)
        return Poly.from_json(data)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise UsageError(f"{flag}: not a JSON array of rationals: {exc}") from None


def _analyze(args) -> tuple[dict, str]:
    m = _load_model(args.model)
    S = args.primes
    if not S.has_two():
        raise MissingPrimeTwo(f"analyze needs 2 in S, got S = {S}")
    report = good_reduction_outside(m, S)
    wp = weierstrass_points(m)
    completed = complete_the_square(m, S)
    out = {
        "model": m.to_json(),
        "completed_model": completed.to_json(),
        "o_s_principal": S.is_principal(),
        "reduction": report.to_json(),
        "weierstrass": wp.to_json(),
    }
    if report.good_outside_s:
        verdict = "good outside S"
    else:
        verdict = "bad at " + ", ".join(map(str, report.bad_primes))
    lines = [
        f"model        {m.pretty()}  (genus {m.genus})",
        f"completed    {completed.pretty()}",
        f"Delta        {format_rational(report.discriminant)}",
        f"S            {S}",
        f"verdict      {verdict} ({report.level})",
        "Weierstrass  rational "
        + "{" + ", ".join(format_rational(r) for r, _ in wp.finite_roots) + "}"
        + f", non-rational degree {sum(wp.nonrational_degree_profile)}, infinity; total {wp.total}",
    ]
    return out, "\n".join(lines)


def _decompose(args) -> tuple[dict, str]:
    m = _load_model(args.model)
    tree = decompose_recursive(m, args.primes, args.strategy, args.shift)
    return tree.to_json(), tree.pretty()


def _fiber(args) -> tuple[dict, str]:
    R1 = _load_poly(args.R1, "R1")
    R2 = _load_poly(args.R2, "R2")
    rep = fiber_genus(R1, R2)
    b = rep.branch_points["X3"]
    text = (
        f"g1={rep.g1} g2={rep.g2} g12={rep.g12}\n"
        f"branch points {b.count} ({b.rational + b.nonrational} finite"
        f"{' + infinity' if b.infinity else ''}), ramification {rep.ramification_total}\n"
        f"fiber product genus g3={rep.g3}"
    )
    return rep.to_json(), text


def _enumerate(args) -> tuple[dict, str]:
    res = enumerate_split_models(args.genus, args.primes, args.bound)
    lines = [
        f"genus {res.genus}, S = {res.primes}: {len(res.classes)} split model classes "
        f"(complete within exponent bound {res.bound})"
    ]
    for c in res.classes:
        sig = ", ".join(format_point(p) for p in c.model_class.signature)
        roots = ", ".join(format_rational(r) for r in c.roots)
        lines.append(
            f"  [{sig}]  roots {{{roots}}}  Delta={format_rational(c.report.discriminant)}"
        )
    return res.to_json(), "\n".join(lines)


def _reduce(args) -> tuple[dict, str]:
    m = _load_model(args.model)
    ok = reduction_bijection_check(m, args.prime)
    out = {"model": m.to_json(), "prime": args.prime, "bijection": ok}
    word = "bijective" if ok else "not bijective"
    return out, f"reduction mod {args.prime} on Weierstrass points: {word}"


_COMMANDS = {
    "analyze": _analyze,
    "decompose": _decompose,
    "fiber-genus": _fiber,
    "enumerate": _enumerate,
    "reduce": _reduce,
}


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        data, text = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ShafdecError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.json is None:
        print(text)
    elif args.json == "-":
        sys.stdout.write(dumps(data))
    else:
        Path(args.json).write_text(dumps(data), encoding="utf-8")
        print(text)
    return 0


def main() -> None:
    sys.exit(run())
