"""Pointed hyperelliptic models y^2 + Q(x) y = P(x) over O_S.

A pointed model of genus g has deg P = 2g + 1 and deg Q <= g, so its
distinguished rational Weierstrass point sits at infinity. The discriminant
used throughout is Lockhart's normalization

    Delta = 2^(4g) * disc_{2g+2}(P + Q^2/4),

with the right-hand side read as a binary form of degree 2g + 2. For an
odd-degree model that is lc^2 * disc(P + Q^2/4); the lc^2 factor catches the
primes where a finite Weierstrass point runs into the one at infinity, and
for monic P it is 1. A prime p outside S is flagged bad for the model exactly
when p divides Delta. The verdict is model-level: a non-minimal model can have p | Delta at
a prime where the curve itself has good reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import BadPrime, InvalidModel, MissingPrimeTwo, NonSquarefree, NotSIntegral
from .exactmath import (
    Poly,
    PrimeSet,
    SupportMap,
    form_discriminant,
    format_rational,
    is_s_integer,
    prime_divisors,
    split_rational_roots,
    support,
)
from .intfactor import is_prime


@dataclass(frozen=True)
class PointedModel:
    genus: int
    P: Poly
    Q: Poly = field(default_factory=Poly)

    def __post_init__(self):
        g = self.genus
        if isinstance(g, bool) or not isinstance(g, int) or g < 1:
            raise InvalidModel(f"genus must be an integer >= 1, got {g!r}")
        if self.P.degree != 2 * g + 1:
            raise InvalidModel(f"deg P must be 2g+1 = {2 * g + 1}, got {self.P.degree}")
        if self.Q.degree > g:
            raise InvalidModel(f"deg Q must be <= g = {g}, got {self.Q.degree}")

    @property
    def form(self) -> Poly:
        """P + Q^2/4, the right-hand side after completing the square."""
        return self.P + self.Q * self.Q * Fraction(1, 4)

    def require_smooth(self) -> Poly:
        f = self.form
        if not f.is_squarefree():
            raise NonSquarefree(f"P + Q^2/4 = {f.pretty()} has a repeated root")
        return f

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "PointedModel":
        try:
            genus = data["genus"]
            P = Poly.from_json(data["P"])
            Q = Poly.from_json(data.get("Q", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidModel(f"malformed model JSON: {exc}") from None
        return cls(genus, P, Q)

    def to_json(self) -> dict[str, Any]:
        return {"genus": self.genus, "P": self.P.to_json(), "Q": self.Q.to_json()}

    def pretty(self) -> str:
        if self.Q.is_zero():
            return f"y^2 = {self.P.pretty()}"
        return f"y^2 + ({self.Q.pretty()})*y = {self.P.pretty()}"


@dataclass(frozen=True)
class ReductionReport:
    discriminant: Fraction
    s_part: SupportMap
    residual: Fraction
    bad_primes: tuple[int, ...]
    good_outside_s: bool
    primes: PrimeSet
    level: str = "model-level reduction"

    def to_json(self) -> dict[str, Any]:
        return {
            "discriminant": format_rational(self.discriminant),
            "s_part": self.s_part.to_json(),
            "residual": format_rational(self.residual),
            "bad_primes": [str(p) for p in self.bad_primes],
            "good_outside_s": self.good_outside_s,
            "primes": self.primes.to_json(),
            "level": self.level,
        }


@dataclass(frozen=True)
class WeierstrassData:
    finite_roots: tuple[tuple[Fraction, int], ...]
    nonrational_degree_profile: tuple[int, ...]
    includes_infinity: bool

    @property
    def total(self) -> int:
        return len(self.finite_roots) + sum(self.nonrational_degree_profile) + int(self.includes_infinity)

    def to_json(self) -> dict[str, Any]:
        return {
            "finite_roots": [format_rational(r) for r, _ in self.finite_roots],
            "nonrational_degree_profile": list(self.nonrational_degree_profile),
            "includes_infinity": self.includes_infinity,
            "total": self.total,
        }


def report_for_discriminant(delta: Fraction, S: PrimeSet) -> ReductionReport:
    """Split a nonzero discriminant into its S-part and the primes outside S."""
    s_part, residual = support(delta, S)
    bad = tuple(prime_divisors(residual))
    return ReductionReport(delta, s_part, residual, bad, not bad, S)


def lockhart_discriminant(m: PointedModel) -> Fraction:
    f = m.require_smooth()
    return Fraction(2) ** (4 * m.genus) * form_discriminant(f, 2 * m.genus + 2)


def complete_the_square(m: PointedModel, S: PrimeSet) -> PointedModel:
    """Replace (P, Q) by (P + Q^2/4, 0); needs 2 invertible in O_S."""
    if not S.has_two():
        raise MissingPrimeTwo(f"completing the square needs 2 in S, got S = {S}")
    if m.Q.is_zero():
        return m
    return PointedModel(m.genus, m.form, Poly())


def good_reduction_outside(m: PointedModel, S: PrimeSet) -> ReductionReport:
    for name, poly in (("P", m.P), ("Q", m.Q)):
        for a in poly:
            if not is_s_integer(a, S):
                raise NotSIntegral(
                    f"coefficient {format_rational(a)} of {name} is not an S-integer for S = {S}"
                )
    return report_for_discriminant(lockhart_discriminant(m), S)


def weierstrass_points(m: PointedModel) -> WeierstrassData:
    f = m.require_smooth()
    roots, cofactor = split_rational_roots(f)
    profile = (cofactor.degree,) if cofactor.degree > 0 else ()
    return WeierstrassData(tuple(roots), profile, includes_infinity=True)


# reduction mod p

def _reduce_mod_p(f: Poly, p: int) -> list[int]:
    out = []
    for a in f:
        if a.denominator % p == 0:
            raise BadPrime(f"{p} divides the denominator of coefficient {format_rational(a)}")
        out.append(a.numerator * pow(a.denominator, -1, p) % p)
    while out and out[-1] == 0:
        out.pop()
    return out


def _divmod_p(a: list[int], b: list[int], p: int) -> list[int]:
    rem = a[:]
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db] * inv % p
        if q:
            for j, c in enumerate(b):
                rem[k + j] = (rem[k + j] - q * c) % p
    rem = rem[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _gcd_degree_p(a: list[int], b: list[int], p: int) -> int:
    while b:
        a, b = b, _divmod_p(a, b, p)
    return len(a) - 1


def _bijection_routes(m: PointedModel, p: int) -> tuple[bool, bool]:
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    if p == 2:
        raise BadPrime("reduction check needs an odd prime")
    f = m.require_smooth()
    fbar = _reduce_mod_p(f, p)
    if len(fbar) - 1 != f.degree:
        by_reduction = False
    else:
        deriv = [(i * a) % p for i, a in enumerate(fbar)][1:]
        while deriv and deriv[-1] == 0:
            deriv.pop()
        by_reduction = bool(deriv) and _gcd_degree_p(fbar, deriv, p) == 0
    by_discriminant = lockhart_discriminant(m).numerator % p != 0
    return by_reduction, by_discriminant


def reduction_bijection_check(m: PointedModel, p: int) -> bool:
    """True iff reduction mod p is a bijection on geometric Weierstrass points.

    Decided twice: once by reducing P + Q^2/4 mod p (degree kept, squarefree
    over F_p), once by p not dividing Delta. The routes must agree.
    """
    by_reduction, by_discriminant = _bijection_routes(m, p)
    if by_reduction != by_discriminant:
        raise AssertionError(
            f"reduction routes disagree at p={p} for {m.pretty()}: "
            f"mod-p={by_reduction}, discriminant={by_discriminant}"
        )
    return by_reduction
