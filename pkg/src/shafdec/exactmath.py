"""Exact rational arithmetic and univariate polynomial algebra.

Rationals are :class:`fractions.Fraction`. Polynomials are immutable
coefficient tuples in ascending degree order. Everything here is exact:
the good-reduction tests downstream are divisibility tests, so no floating
point ever enters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import zip_longest
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence, Union

from .errors import DegreeTooLow, InvalidPrimeSet, ZeroInput, ZeroPolynomial
from .intfactor import divisors, factorint, is_prime

Rational = Fraction
RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"n/d"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(value.replace(" ", ""))
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Poly:
    """Univariate polynomial over Q, coefficients in ascending degree order."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        c = [to_rational(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, a: RationalLike) -> "Poly":
        return cls([a])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-to_rational(r), 1])
        return p

    @classmethod
    def from_json(cls, data: Sequence[RationalLike]) -> "Poly":
        if not isinstance(data, (list, tuple)):
            raise TypeError("polynomial JSON must be an array of rational strings")
        return cls(data)

    def to_json(self) -> list[str]:
        return [format_rational(a) for a in self._c]

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def lc(self) -> Fraction:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._c[-1]

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly({self.to_json()!r})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}*{mono}"
                else:
                    body = f"({format_rational(mag)})*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic
    @staticmethod
    def _coerce(other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other) -> "Poly":
        o = self._coerce(other)
        return Poly(a + b for a, b in zip_longest(self._c, o._c, fillvalue=Fraction(0)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self._c)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        o = self._coerce(other)
        if not self._c or not o._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(o._c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly([1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        d = self._coerce(other)
        if d.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self._c)
        dd = d.degree
        if len(rem) - 1 < dd:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - dd)
        inv = 1 / d.lc
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] * inv
            quo[k] = q
            if q:
                for j, b in enumerate(d._c):
                    rem[k + j] -= q * b
        return Poly(quo), Poly(rem[:dd])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * a for i, a in enumerate(self._c) if i)

    def shift(self, t: RationalLike) -> "Poly":
        """Return ``p(x + t)`` (Taylor shift)."""
        t = to_rational(t)
        c = list(self._c)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] += t * c[j + 1]
        return Poly(c)

    def monic(self) -> "Poly":
        lead = self.lc
        return Poly(a / lead for a in self._c)

    def integer_form(self) -> tuple[int, list[int]]:
        """Return ``(scale, ints)`` with ``scale * self`` = the primitive integer
        polynomial ``ints`` (ascending) and positive leading coefficient sign kept."""
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no integer form")
        den = lcm(*(a.denominator for a in self._c))
        ints = [int(a * den) for a in self._c]
        cont = gcd(*ints)
        return Fraction(den, cont), [a // cont for a in ints]

    def is_squarefree(self) -> bool:
        if self.degree < 1:
            return True
        return poly_gcd(self, self.derivative()).degree == 0


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; the gcd of two zero polynomials is zero."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


# determinants and resultants

def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix of ascending coefficient lists (rows of f first)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    sf, fi = f.integer_form()
    sg, gi = g.integer_form()
    det = bareiss_determinant(sylvester_matrix(fi, gi))
    return Fraction(det) / (sf ** g.degree * sg ** f.degree)


def discriminant(f: Poly) -> Fraction:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f); equals 1 for linear f."""
    n = f.degree
    if n < 1:
        raise DegreeTooLow(f"discriminant needs degree >= 1, got {f.pretty()}")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def form_discriminant(f: Poly, n: int) -> Fraction:
    """Discriminant of f viewed as a binary form of degree n >= deg f.

    Missing top coefficients are roots at infinity: one of them multiplies
    disc(f) by lc(f)^2, two or more make the form singular.
    """
    d = f.degree
    if n < d:
        raise ValueError(f"form degree {n} below polynomial degree {d}")
    if n == d:
        return discriminant(f)
    if n == d + 1:
        return f.lc**2 * discriminant(f)
    return Fraction(0)


# rational roots

def _int_eval_zero(ints: Sequence[int], p: int, q: int) -> bool:
    """Is q^n f(p/q) zero? Horner over the homogenized integer polynomial."""
    acc, qpow = 0, 1
    for a in reversed(ints):
        acc = acc * p + a * qpow
        qpow *= q
    return acc == 0


def _deflate(ints: list[int], p: int, q: int) -> list[int] | None:
    """Exact quotient of ``ints`` (ascending) by q*x - p, or None."""
    n = len(ints) - 1
    out = [0] * n
    if ints[n] % q:
        return None
    out[n - 1] = ints[n] // q
    for k in range(n - 1, 0, -1):
        num = ints[k] + p * out[k]
        if num % q:
            return None
        out[k - 1] = num // q
    if ints[0] != -p * out[0]:
        return None
    return out


def split_rational_roots(f: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """Rational roots of ``f`` with multiplicity, plus the root-free cofactor.

    ``f == cofactor * prod (x - r)^m`` holds exactly. Roots come back in
    ascending order. Candidates p/q run over divisors of the constant and
    leading coefficients of the primitive integer form, pruned by the Cauchy
    bound.
    """
    if f.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    _, ints = f.integer_form()
    zero_mult = 0
    while len(ints) > 1 and ints[0] == 0:
        ints = ints[1:]
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if len(ints) > 1:
        lead = abs(ints[-1])
        cauchy = lead + max(abs(a) for a in ints[:-1])
        qs = divisors(ints[-1])
        for p0 in divisors(ints[0]):
            for q in qs:
                if len(ints) < 2:
                    break
                if gcd(p0, q) != 1 or p0 * lead > cauchy * q:
                    continue
                for p in (p0, -p0):
                    if ints[0] % p or ints[-1] % q or not _int_eval_zero(ints, p, q):
                        continue
                    mult = 0
                    while len(ints) > 1:
                        nxt = _deflate(ints, p, q)
                        if nxt is None:
                            break
                        ints = nxt
                        mult += 1
                    roots.append((Fraction(p, q), mult))
    roots.sort(key=lambda rm: rm[0])
    linear = Poly.from_roots(r for r, m in roots for _ in range(m))
    cof, rem = divmod(f, linear)
    assert rem.is_zero()
    return roots, cof


def rational_roots(f: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots of ``f`` as ``(root, multiplicity)``, ascending."""
    return split_rational_roots(f)[0]


# S-integers and S-units

@dataclass(frozen=True)
class PrimeSet:
    """Finite set S of rational primes; O_S = Z[1/p : p in S]."""

    primes: tuple[int, ...] = ()

    def __post_init__(self):
        ps = []
        for p in self.primes:
            if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
                raise InvalidPrimeSet(f"{p!r} is not a prime")
            ps.append(p)
        if len(set(ps)) != len(ps):
            raise InvalidPrimeSet(f"duplicate primes in {ps}")
        object.__setattr__(self, "primes", tuple(sorted(ps)))

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        text = text.strip()
        if not text:
            return cls(())
        try:
            items = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InvalidPrimeSet(f"cannot parse prime list {text!r}") from None
        return cls(tuple(items))

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.primes)) + "}"

    def has_two(self) -> bool:
        return 2 in self.primes

    def is_principal(self) -> bool:
        # Every localization of Z is a PID, so O_S is principal for any S over Q.
        return True

    def to_json(self) -> list[int]:
        return list(self.primes)


@dataclass(frozen=True)
class SupportMap:
    """Sign and exponents of the S-part of a nonzero rational."""

    unit_sign: int = 1
    exponents: dict[int, int] = field(default_factory=dict)

    def value(self) -> Fraction:
        out = Fraction(self.unit_sign)
        for p, e in self.exponents.items():
            out *= Fraction(p) ** e
        return out

    def to_json(self) -> dict:
        return {
            "unit_sign": self.unit_sign,
            "exponents": {str(p): e for p, e in sorted(self.exponents.items())},
        }


def _valuation(n: int, p: int) -> tuple[int, int]:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def support(q: RationalLike, S: PrimeSet) -> tuple[SupportMap, Fraction]:
    """Write ``q = sign * prod_{p in S} p^e * residual`` with residual > 0 and
    coprime to every prime of S."""
    q = to_rational(q)
    if q == 0:
        raise ZeroInput("support of zero")
    num, den = abs(q.numerator), q.denominator
    exps = {}
    for p in S:
        a, num = _valuation(num, p)
        b, den = _valuation(den, p)
        if a - b:
            exps[p] = a - b
    return SupportMap(1 if q > 0 else -1, exps), Fraction(num, den)


def is_s_integer(q: RationalLike, S: PrimeSet) -> bool:
    q = to_rational(q)
    if q == 0:
        return True
    return support(q, S)[1].denominator == 1


def _strip(n: int, primes: Iterable[int]) -> int:
    n = abs(n)
    for p in primes:
        while n % p == 0:
            n //= p
    return n


def is_s_unit(q: RationalLike, S: PrimeSet) -> bool:
    q = to_rational(q)
    return q != 0 and _strip(q.numerator, S.primes) == 1 and _strip(q.denominator, S.primes) == 1


def prime_divisors(q: Fraction) -> list[int]:
    """Primes dividing the numerator or denominator of a nonzero rational."""
    return sorted(set(factorint(q.numerator)) | set(factorint(q.denominator)))
