"""Elliptic curves over Z and their Frobenius traces at good odd primes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import ContractError

# Deterministic Miller-Rabin witnesses for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
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


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


class ExcludedPrime(Exception):
    """The prime is bad for this data source (reason in ``args[0]``)."""

    def __init__(self, p: int, reason: str):
        super().__init__(f"p={p}: {reason}")
        self.p = p
        self.reason = reason


class UnsupportedPrime(ExcludedPrime):
    """Characteristic 2 is not handled by the point counter."""


@dataclass(frozen=True)
class ECModel:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0

    def __post_init__(self):
        if self.discriminant == 0:
            raise ContractError(f"singular curve {self.coefficients}")

    @classmethod
    def short(cls, a: int, b: int) -> ECModel:
        return cls(0, 0, 0, a, b)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self) -> tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __str__(self):
        return "[" + ",".join(map(str, self.coefficients)) + "]"


def count_points(E: ECModel, p: int) -> int:
    """a_p = p + 1 - #E(F_p) for a good odd prime p, by enumerating x.

    Completing the square turns the model into (2y + a1 x + a3)^2 = r(x)
    with r = 4x^3 + b2 x^2 + 2 b4 x + b6, so each x contributes
    1 + (r(x)/p) affine points and a_p = -sum_x (r(x)/p).
    """
    if p == 2:
        raise UnsupportedPrime(p, "characteristic 2 not supported")
    if E.discriminant % p == 0:
        raise ExcludedPrime(p, "bad reduction")
    if p >= 3_000_000_000:
        raise ContractError("point counting limited to p < 3e9 (int64 products)")
    b2, b4, b6, _ = E.b_invariants
    x = np.arange(p, dtype=np.int64)
    r = np.full(p, 4 % p, dtype=np.int64)
    for c in (b2 % p, (2 * b4) % p, b6 % p):
        r = (r * x + c) % p
    chi = np.full(p, -1, dtype=np.int64)
    chi[(x * x) % p] = 1
    chi[0] = 0
    return -int(chi[r].sum())


def count_points_naive(E: ECModel, p: int) -> int:
    """Brute-force a_p over all (x, y) pairs; an independent test oracle."""
    a1, a2, a3, a4, a6 = E.coefficients
    n = 1
    for x in range(p):
        rhs = (x**3 + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - rhs) % p == 0:
                n += 1
    return p + 1 - n


CM_CURVE = ECModel.short(-1, 0)          # y^2 = x^3 - x, CM by Z[i]
LEVEL11_CURVE = ECModel(0, -1, 1, -10, -20)  # y^2 + y = x^3 - x^2 - 10x - 20
