"""Integer primality and factorization at desk scale.

Trial division by small primes, then Pollard rho (Brent variant) with a fixed
seed sequence so that factorizations are reproducible run to run.
"""

from __future__ import annotations

from collections import Counter
from math import gcd, isqrt

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, isqrt(p) + 1))]

# Deterministic for n < 3.3e24; beyond that a strong pseudoprime to all of
# these bases is not known to exist.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, 10_000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho failed on {n}")  # pragma: no cover


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``; empty for 0 and ±1."""
    n = abs(n)
    out: Counter[int] = Counter()
    if n < 2:
        return {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] += 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] += 1
            continue
        d = _rho(m)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in ascending order (``n`` nonzero)."""
    if n == 0:
        raise ValueError("divisors of 0")
    divs = [1]
    for p, e in factorint(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
