"""Recursive splitting of a pointed genus-g model into genus-1 pieces.

One step, for a model y^2 = P(x) with deg P = 2g + 1:

1. translate x -> x + t so that P(0) != 0,
2. reverse: R(z) = z^(2g+2) P(1/z), an even model of the same curve whose
   roots are 0 and the reciprocals of the roots of P,
3. split R = R1 * R2 with deg R1 = 3 and deg R2 = 2g - 1,
4. report reduction of y^2 = R1 (genus 1) and y^2 = R2 (genus g - 1) and the
   genus of their fiber product.

y^2 = R2 has odd degree, so it is again pointed at infinity and feeds the next
step directly as a genus-(g-1) model. The recursion stops at genus 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Union

from .errors import (
    DegreeMismatch,
    GenusTooLow,
    MissingPrimeTwo,
    NotCoprime,
    NotSplit,
    RepeatedRoots,
    ShafdecError,
    ZeroConstantTerm,
)
from .exactmath import (
    Poly,
    PrimeSet,
    discriminant,
    form_discriminant,
    format_rational,
    is_s_unit,
    poly_gcd,
    resultant,
    split_rational_roots,
)
from .fiberprod import FiberGenusReport, fiber_genus, genus_of_even_model
from .hypermodel import (
    PointedModel,
    ReductionReport,
    complete_the_square,
    lockhart_discriminant,
    report_for_discriminant,
)

SORTED_FIRST_THREE = "sorted-first-three"
EXHAUSTIVE = "exhaustive"
STRATEGIES = (SORTED_FIRST_THREE, EXHAUSTIVE)

SHIFT_INTEGER = "integer"
SHIFT_UNIT = "unit"
SHIFTS = (SHIFT_INTEGER, SHIFT_UNIT)


def shift_to_nonzero_constant(P: Poly) -> tuple[Fraction, Poly]:
    """Smallest integer t >= 0 with P(t) != 0, and P(x + t)."""
    if P.is_zero():
        raise ValueError("cannot shift the zero polynomial")
    t = 0
    while P(t) == 0:
        t += 1
    return Fraction(t), P.shift(t)


def unit_shift(P: Poly, S: PrimeSet, bound: int = 4) -> Fraction | None:
    """A rational t such that t - a is an S-unit for every root a of P.

    With such a t, P(t) is an S-unit and the reversed model keeps every
    branch-point difference an S-unit, so the factor curves inherit good
    reduction outside S. Candidates are a1 + u for the smallest root a1 and
    S-units u with exponents in [-bound, bound]; the first hit in order of
    (|t|, t) is returned, or None when P is not split or nothing qualifies.
    """
    roots, cofactor = split_rational_roots(P)
    if cofactor.degree > 0 or not roots:
        return None
    a1 = roots[0][0]
    units = [Fraction(1)]
    for p in S:
        units = [u * Fraction(p) ** e for u in units for e in range(-bound, bound + 1)]
    others = [a for a, _ in roots[1:]]
    hits = {
        a1 + s * u
        for u in units
        for s in (1, -1)
        if all(is_s_unit(a1 + s * u - a, S) for a in others)
    }
    return min(hits, key=lambda t: (abs(t), t), default=None)


def reverse(P: Poly, genus: int) -> Poly:
    """R(z) = z^(2g+2) P(1/z)."""
    if P.degree != 2 * genus + 1:
        raise DegreeMismatch(f"reverse needs deg P = {2 * genus + 1}, got {P.degree}")
    if P[0] == 0:
        raise ZeroConstantTerm("reverse needs P(0) != 0; shift first")
    return Poly([0, *reversed(P.coefficients)])


@dataclass(frozen=True)
class SplitChoice:
    strategy: str
    roots1: tuple[Fraction, ...]
    roots2: tuple[Fraction, ...]
    R1: Poly
    R2: Poly

    def to_json(self) -> dict[str, Any]:
        return {
            "strategy": self.strategy,
            "R1_roots": [format_rational(r) for r in self.roots1],
            "R2_roots": [format_rational(r) for r in self.roots2],
            "R1": self.R1.to_json(),
            "R2": self.R2.to_json(),
        }


def _split_roots(R: Poly, genus: int) -> list[Fraction]:
    if genus < 2:
        raise GenusTooLow(f"splitting needs genus >= 2, got {genus}")
    if R.degree != 2 * genus + 2:
        raise DegreeMismatch(f"split needs deg R = {2 * genus + 2}, got {R.degree}")
    roots, cofactor = split_rational_roots(R)
    if any(m > 1 for _, m in roots):
        raise RepeatedRoots(f"{R.pretty('z')} has a repeated rational root")
    if cofactor.degree > 0:
        if not cofactor.is_squarefree():
            raise RepeatedRoots(f"{R.pretty('z')} has a repeated root")
        raise NotSplit(
            f"{R.pretty('z')} has {cofactor.degree} non-rational roots; "
            "splitting over an extension field is not supported"
        )
    return [r for r, _ in roots]


def _choice(strategy: str, lead: Fraction, first: tuple, rest: tuple) -> SplitChoice:
    return SplitChoice(strategy, first, rest, Poly.from_roots(first, lead), Poly.from_roots(rest))


def split(R: Poly, genus: int, strategy: str = SORTED_FIRST_THREE) -> Union[SplitChoice, list[SplitChoice]]:
    """Factor a split R as R1 * R2 with deg R1 = 3, deg R2 = 2g - 1.

    R1 carries the leading coefficient of R, so R2 is monic. The default
    strategy puts the three smallest roots in R1; ``exhaustive`` returns every
    one of the C(2g+2, 3) partitions in lexicographic order.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown split strategy {strategy!r}")
    roots = _split_roots(R, genus)
    lead = R.lc
    if strategy == SORTED_FIRST_THREE:
        return _choice(strategy, lead, tuple(roots[:3]), tuple(roots[3:]))
    out = []
    for idx in combinations(range(len(roots)), 3):
        first = tuple(roots[i] for i in idx)
        rest = tuple(r for i, r in enumerate(roots) if i not in idx)
        out.append(_choice(strategy, lead, first, rest))
    return out


@dataclass(frozen=True)
class FactorReduction:
    left: ReductionReport
    right: ReductionReport
    resultant: Fraction
    resultant_report: ReductionReport

    @property
    def good(self) -> bool:
        return self.left.good_outside_s and self.right.good_outside_s

    def __iter__(self):
        return iter((self.left, self.right))

    def to_json(self) -> dict[str, Any]:
        return {
            "R1": self.left.to_json(),
            "R2": self.right.to_json(),
            "resultant": format_rational(self.resultant),
            "resultant_report": self.resultant_report.to_json(),
            "multiplicativity_holds": True,
        }


def model_discriminant(R: Poly) -> Fraction:
    """2^(4g) disc_{2g+2}(R) for the curve y^2 = R(z) of genus g."""
    g = genus_of_even_model(R)
    return Fraction(2) ** (4 * g) * form_discriminant(R, 2 * g + 2)


def factor_reduction(R1: Poly, R2: Poly, S: PrimeSet) -> FactorReduction:
    """Reduction reports for y^2 = R1 and y^2 = R2, plus the Res(R1, R2) support.

    Also confirms disc(R1 R2) = disc(R1) disc(R2) Res(R1, R2)^2 exactly.
    """
    for R in (R1, R2):
        if not R.is_squarefree():
            raise RepeatedRoots(f"{R.pretty('z')} has a repeated root")
    if poly_gcd(R1, R2).degree > 0:
        raise NotCoprime(f"{R1.pretty('z')} and {R2.pretty('z')} share a root")
    left = report_for_discriminant(model_discriminant(R1), S)
    right = report_for_discriminant(model_discriminant(R2), S)
    res = resultant(R1, R2)
    if discriminant(R1 * R2) != discriminant(R1) * discriminant(R2) * res**2:
        raise AssertionError("discriminant multiplicativity failed")
    return FactorReduction(left, right, res, report_for_discriminant(res, S))


@dataclass(frozen=True)
class Leaf:
    model: PointedModel
    report: ReductionReport

    @property
    def genus(self) -> int:
        return self.model.genus

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "leaf",
            "genus": self.genus,
            "model": self.model.to_json(),
            "report": self.report.to_json(),
        }


@dataclass(frozen=True)
class DecompositionNode:
    model: PointedModel
    shift: Fraction
    shift_kind: str
    shifted: Poly
    R: Poly
    split: SplitChoice
    child_reports: FactorReduction
    fiber: FiberGenusReport
    left: Leaf
    right: Union["DecompositionNode", Leaf]
    alternatives: tuple[tuple[SplitChoice, FactorReduction], ...] = field(default=())

    @property
    def genus(self) -> int:
        return self.model.genus

    def to_json(self) -> dict[str, Any]:
        out = {
            "kind": "node",
            "genus": self.genus,
            "model": self.model.to_json(),
            "shift": format_rational(self.shift),
            "shift_kind": self.shift_kind,
            "R": self.R.to_json(),
            "split": self.split.to_json(),
            "child_reports": self.child_reports.to_json(),
            "fiber": self.fiber.to_json(),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }
        if self.alternatives:
            out["alternatives"] = [
                {
                    "R1_roots": [format_rational(r) for r in c.roots1],
                    "bad_primes": [str(p) for p in _bad_union(fr)],
                }
                for c, fr in self.alternatives
            ]
        return out


def _bad_union(fr: FactorReduction) -> list[int]:
    return sorted(set(fr.left.bad_primes) | set(fr.right.bad_primes))


@dataclass(frozen=True)
class DecompositionTree:
    root: Union[DecompositionNode, Leaf]
    primes: PrimeSet
    strategy: str
    shift_rule: str

    def internal_nodes(self) -> list[DecompositionNode]:
        out, cur = [], self.root
        while isinstance(cur, DecompositionNode):
            out.append(cur)
            cur = cur.right
        return out

    def leaves(self) -> list[Leaf]:
        nodes = self.internal_nodes()
        tail = nodes[-1].right if nodes else self.root
        return [n.left for n in nodes] + [tail]

    def all_factor_reductions_good(self) -> bool:
        return all(n.child_reports.good for n in self.internal_nodes())

    def to_json(self) -> dict[str, Any]:
        return {
            "primes": self.primes.to_json(),
            "strategy": self.strategy,
            "shift_rule": self.shift_rule,
            "internal_nodes": len(self.internal_nodes()),
            "leaves": len(self.leaves()),
            "tree": self.root.to_json(),
        }

    def pretty(self) -> str:
        lines = [f"decomposition over S = {self.primes} ({self.strategy}, {self.shift_rule} shift)"]
        _render(self.root, lines, "")
        return "\n".join(lines)


def _verdict(r: ReductionReport) -> str:
    if r.good_outside_s:
        return "good outside S"
    return "bad at " + ",".join(map(str, r.bad_primes))


def _render(node, lines: list[str], indent: str) -> None:
    if isinstance(node, Leaf):
        lines.append(
            f"{indent}leaf g=1: {node.model.pretty()}  "
            f"[Delta={format_rational(node.report.discriminant)}, {_verdict(node.report)}]"
        )
        return
    lines.append(f"{indent}node g={node.genus}: {node.model.pretty()}")
    sub = indent + "  "
    lines.append(
        f"{sub}shift t={format_rational(node.shift)} ({node.shift_kind}), R(z) = {node.R.pretty('z')}"
    )
    roots1 = ", ".join(format_rational(r) for r in node.split.roots1)
    roots2 = ", ".join(format_rational(r) for r in node.split.roots2)
    lines.append(f"{sub}R1 roots {{{roots1}}}  R2 roots {{{roots2}}}")
    res = node.child_reports.resultant_report
    lines.append(
        f"{sub}Res(R1,R2)={format_rational(node.child_reports.resultant)} [{_verdict(res)}]"
    )
    f = node.fiber
    lines.append(f"{sub}fiber product genus {f.g3} = {f.g1} + {f.g2} + {f.g12}")
    _render(node.left, lines, sub)
    if isinstance(node.right, Leaf):
        _render(node.right, lines, sub)
    else:
        lines.append(
            f"{sub}R2 factor g={node.right.genus} "
            f"[Delta={format_rational(node.child_reports.right.discriminant)}, "
            f"{_verdict(node.child_reports.right)}]"
        )
        _render(node.right, lines, sub)


def _choose_shift(P: Poly, S: PrimeSet, rule: str) -> tuple[Fraction, Poly, str]:
    if rule == SHIFT_UNIT:
        t = unit_shift(P, S)
        if t is not None:
            return t, P.shift(t), SHIFT_UNIT
    return (*shift_to_nonzero_constant(P), SHIFT_INTEGER)


def _decompose(m: PointedModel, S: PrimeSet, strategy: str, rule: str, path: tuple[str, ...]):
    try:
        if not S.has_two():
            raise MissingPrimeTwo(f"decomposition needs 2 in S, got S = {S}")
        m = complete_the_square(m, S)
        if m.genus == 1:
            return Leaf(m, report_for_discriminant(lockhart_discriminant(m), S))
        m.require_smooth()
        t, shifted, kind = _choose_shift(m.P, S, rule)
        R = reverse(shifted, m.genus)
        choice = split(R, m.genus, SORTED_FIRST_THREE)
        alternatives = ()
        if strategy == EXHAUSTIVE:
            alternatives = tuple(
                (c, factor_reduction(c.R1, c.R2, S)) for c in split(R, m.genus, EXHAUSTIVE)
            )
        reports = factor_reduction(choice.R1, choice.R2, S)
        fiber = fiber_genus(choice.R1, choice.R2)
        left = Leaf(PointedModel(1, choice.R1), reports.left)
        right_model = PointedModel(m.genus - 1, choice.R2)
    except ShafdecError as exc:
        raise exc.at(*path)
    right = _decompose(right_model, S, strategy, rule, path + ("right",))
    return DecompositionNode(m, t, kind, shifted, R, choice, reports, fiber, left, right, alternatives)


def decompose_recursive(
    m: PointedModel,
    S: PrimeSet,
    strategy: str = SORTED_FIRST_THREE,
    shift_rule: str = SHIFT_UNIT,
) -> DecompositionTree:
    """Split ``m`` down to genus-1 leaves; a genus-g tree has g - 1 nodes and g leaves.

    ``shift_rule="unit"`` translates by an S-unit-compatible t when one exists
    (see :func:`unit_shift`) and otherwise falls back to the smallest
    non-negative integer, which is all ``"integer"`` ever uses.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown split strategy {strategy!r}")
    if shift_rule not in SHIFTS:
        raise ValueError(f"unknown shift rule {shift_rule!r}")
    root = _decompose(m, S, strategy, shift_rule, ("root",))
    return DecompositionTree(root, S, strategy, shift_rule)
