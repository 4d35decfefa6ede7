"""Small exact number-theoretic helpers shared by the algebra layer."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational


class ContractError(ValueError):
    """An input violates a documented precondition."""


class DimensionError(ValueError):
    """Matrix or vector shapes do not fit together."""


def rat(x):
    """Normalize a rational: ``Fraction`` with denominator 1 becomes ``int``.

    Keeping integral values as ``int`` makes integer polynomials and matrices
    an order of magnitude cheaper than carrying ``Fraction`` everywhere.
    """
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return rat(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return rat(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def is_rational(x) -> bool:
    return isinstance(x, Rational) and not isinstance(x, bool)


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization, fine for the small moduli used here."""
    if n < 1:
        raise ContractError(f"factorize needs n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def orders_with_totient_at_most(D: int) -> list[int]:
    """All k >= 1 with phi(k) <= D.

    Uses phi(k) >= sqrt(k/2), so k <= 2*D**2 bounds the search.
    """
    if D < 1:
        raise ContractError(f"degree bound must be >= 1, got {D}")
    return [k for k in range(1, 2 * D * D + 1) if totient(k) <= D]
