"""Desk-scale enumeration of split pointed models with S-unit discriminant.

A monic split model y^2 = prod (x - a_i) has an S-unit discriminant exactly
when every difference a_i - a_j is an S-unit. After an affine change of
variable we may take a_1 = 0 and a_2 = 1, so every other root lies in

    Lambda = { lam : lam and lam - 1 are S-units },

the x-values of the S-unit equation x + y = 1. Configurations are then
deduplicated up to PGL_2 by a canonical cross-ratio signature. Exponents of
every S-unit involved are capped at a bound B, and results are complete only
within that bound.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Any, Iterable, Sequence, Union

from .errors import MissingPrimeTwo, RepeatedPoint, TooFewPoints
from .exactmath import Poly, PrimeSet, format_rational, support
from .hypermodel import PointedModel, ReductionReport, good_reduction_outside

INF = float("inf")
Point = Union[Fraction, float]


def format_point(p: Point) -> str:
    return "oo" if p == INF else format_rational(p)


def parse_point(text: str) -> Point:
    return INF if text in ("oo", "inf", "infinity") else Fraction(text)


def bounded_s_unit(q: Fraction, S: PrimeSet, bound: int) -> bool:
    """q is an S-unit whose exponents all lie in [-bound, bound]."""
    if q == 0:
        return False
    smap, residual = support(q, S)
    return residual == 1 and all(abs(e) <= bound for e in smap.exponents.values())


@dataclass(frozen=True, order=True)
class SUnitSolution:
    x: Fraction
    y: Fraction

    def to_json(self) -> list[str]:
        return [format_rational(self.x), format_rational(self.y)]


def _scan(args) -> list[SUnitSolution]:
    primes, bound, first_exps = args
    S = PrimeSet(primes)
    rest = range(-bound, bound + 1)
    out = []
    for e0 in first_exps:
        for tail in product(rest, repeat=len(primes) - 1):
            mag = Fraction(1)
            for p, e in zip(primes, (e0, *tail)):
                mag *= Fraction(p) ** e
            for x in (mag, -mag):
                if bounded_s_unit(1 - x, S, bound):
                    out.append(SUnitSolution(x, 1 - x))
    return out


def _workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("SHAFDEC_THREADS", "1") or 1)
    return max(1, workers)


def s_unit_solutions(S: PrimeSet, bound: int, workers: int | None = None) -> list[SUnitSolution]:
    """All x + y = 1 with x, y S-units of exponents at most ``bound``, sorted by x."""
    if bound < 0:
        raise ValueError("exponent bound must be >= 0")
    if not len(S):
        # only x = +-1 remain, and neither 1 - 1 nor 1 + 1 is a unit of Z
        return []
    first = list(range(-bound, bound + 1))
    n = _workers(workers)
    chunks = [first[i::n] for i in range(n)]
    jobs = [(S.primes, bound, c) for c in chunks if c]
    if n > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            parts = list(pool.map(_scan, jobs))
    else:
        parts = [_scan(j) for j in jobs]
    return sorted(s for part in parts for s in part)


# PGL_2 canonical forms

def _to_zero_one_inf(p: Point, q: Point, r: Point) -> tuple:
    """Coefficients (a, b, c, d) of the Moebius map sending p, q, r to 0, 1, oo."""
    if p == INF:
        return (Fraction(0), q - r, Fraction(1), -r)
    if q == INF:
        return (Fraction(1), -p, Fraction(1), -r)
    if r == INF:
        return (Fraction(1), -p, Fraction(0), q - p)
    return (q - r, -p * (q - r), q - p, -r * (q - p))


def apply_mobius(coeffs: Sequence[Fraction], z: Point) -> Point:
    a, b, c, d = coeffs
    if z == INF:
        return INF if c == 0 else a / c
    den = c * z + d
    if den == 0:
        return INF
    return (a * z + b) / den


@dataclass(frozen=True)
class ModelClass:
    points: tuple[Point, ...]
    signature: tuple[Point, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "points": [format_point(p) for p in self.points],
            "signature": [format_point(p) for p in self.signature],
        }


def canonical_class(points: Iterable[Point]) -> ModelClass:
    """PGL_2 canonical form of a configuration of distinct points of P^1(Q).

    For each ordered triple of points, send it to (0, 1, oo) and sort the
    images of the others; the signature is the lexicographic minimum.
    """
    pts = [p if p == INF else Fraction(p) for p in points]
    if len(pts) < 4:
        raise TooFewPoints(f"need at least 4 points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise RepeatedPoint("configuration has a repeated point")
    best = None
    for i, j, k in permutations(range(len(pts)), 3):
        m = _to_zero_one_inf(pts[i], pts[j], pts[k])
        images = tuple(sorted(apply_mobius(m, pts[t]) for t in range(len(pts)) if t not in (i, j, k)))
        if best is None or images < best:
            best = images
    return ModelClass(tuple(sorted(pts)), best)


# split model enumeration

@dataclass(frozen=True)
class EnumeratedClass:
    model_class: ModelClass
    roots: tuple[Fraction, ...]
    model: PointedModel
    report: ReductionReport
    members: int

    def to_json(self) -> dict[str, Any]:
        out = self.model_class.to_json()
        out.update(
            {
                "roots": [format_rational(r) for r in self.roots],
                "model": self.model.to_json(),
                "discriminant": self.report.to_json(),
                "members": self.members,
            }
        )
        return out


@dataclass(frozen=True)
class EnumerationResult:
    genus: int
    primes: PrimeSet
    bound: int
    classes: tuple[EnumeratedClass, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "genus": self.genus,
            "primes": self.primes.to_json(),
            "bound": self.bound,
            "label": "split model classes",
            "completeness": f"complete within exponent bound {self.bound}",
            "count": len(self.classes),
            "classes": [c.to_json() for c in self.classes],
        }


def _cliques(lam: list[Fraction], adj: dict, size: int, start: Sequence[int]) -> list[tuple]:
    out = []

    def grow(chosen: list[int], cands: list[int]):
        if len(chosen) == size:
            out.append(tuple(lam[i] for i in chosen))
            return
        for pos, i in enumerate(cands):
            grow(chosen + [i], [j for j in cands[pos + 1:] if j in adj[i]])

    for i in start:
        grow([i], [j for j in range(i + 1, len(lam)) if j in adj[i]])
    return out


def _classify(args) -> list[tuple]:
    lam, adj, size, start = args
    out = []
    for extra in _cliques(lam, adj, size, start):
        roots = tuple(sorted((Fraction(0), Fraction(1), *extra)))
        out.append((canonical_class((*roots, INF)).signature, roots))
    return out


def _representative_key(roots: tuple[Fraction, ...]):
    # non-negative integral roots first, then small ones
    return (
        sum(r < 0 for r in roots),
        sum(r.denominator != 1 for r in roots),
        max(abs(r) for r in roots),
        roots,
    )


def enumerate_split_models(
    genus: int, S: PrimeSet, bound: int, workers: int | None = None
) -> EnumerationResult:
    if genus < 1:
        raise ValueError("genus must be >= 1")
    if not S.has_two():
        raise MissingPrimeTwo(f"enumeration needs 2 in S, got S = {S}")
    lam = sorted({s.x for s in s_unit_solutions(S, bound, workers)})
    adj = {
        i: {j for j in range(len(lam)) if j != i and bounded_s_unit(lam[i] - lam[j], S, bound)}
        for i in range(len(lam))
    }
    size = 2 * genus - 1
    n = _workers(workers)
    jobs = [(lam, adj, size, list(range(len(lam)))[w::n]) for w in range(n)]
    if n > 1 and len(lam) > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            found = [x for part in pool.map(_classify, jobs) for x in part]
    else:
        found = [x for job in jobs for x in _classify(job)]

    groups: dict[tuple, list[tuple]] = {}
    for sig, roots in found:
        groups.setdefault(sig, []).append(roots)
    classes = []
    for sig in sorted(groups):
        members = groups[sig]
        roots = min(members, key=_representative_key)
        model = PointedModel(genus, Poly.from_roots(roots))
        mc = ModelClass(tuple(sorted((*roots, INF))), sig)
        classes.append(
            EnumeratedClass(mc, roots, model, good_reduction_outside(model, S), len(set(members)))
        )
    return EnumerationResult(genus, S, bound, tuple(classes))
