"""Elements of cyclotomic fields Q(zeta_N) in the power basis."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .arith import ContractError, is_rational, lcm, mobius, rat, totient
from .poly import RatPoly, cyclotomic_polynomial, poly_xgcd


@lru_cache(maxsize=None)
def _reduction_table(N: int) -> tuple[tuple, ...]:
    """Coordinates of x^j mod Phi_N for j in [0, 2*phi(N) - 1)."""
    phi = cyclotomic_polynomial(N)
    d = phi.degree
    table = []
    for j in range(max(2 * d - 1, 1)):
        table.append(tuple((RatPoly.monomial(j) % phi).coeffs) + (0,) * d)
    return tuple(t[:d] for t in table)


@lru_cache(maxsize=None)
def _ramanujan_sum(N: int, j: int) -> int:
    """Trace of zeta_N^j from Q(zeta_N) down to Q."""
    g = math.gcd(j, N)
    q = N // g
    return mobius(q) * totient(N) // totient(q)


def _reduce(N: int, coeffs) -> tuple:
    d = totient(N)
    out = list(coeffs[:d]) + [0] * max(0, d - len(coeffs))
    if len(coeffs) > d:
        table = _reduction_table(N)
        for j in range(d, len(coeffs)):
            c = coeffs[j]
            if c == 0:
                continue
            if j < len(table):
                row = table[j]
            else:
                row = (RatPoly.monomial(j) % cyclotomic_polynomial(N)).coeffs
                row = tuple(row) + (0,) * (d - len(row))
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return tuple(rat(a) for a in out)


class CyclotomicElement:
    """An element of Q(zeta_N), stored as phi(N) rational coordinates.

    Elements of different conductors combine by lifting both to the lcm.
    Equality is exact and conductor independent; hashing uses the
    normalized trace, which is also conductor independent.
    """

    __slots__ = ("N", "coords")

    def __init__(self, N: int, coords=()):
        if N < 1:
            raise ContractError(f"conductor must be >= 1, got {N}")
        coords = tuple(rat(a) for a in coords)
        d = totient(N)
        if len(coords) > d:
            coords = _reduce(N, coords)
        elif len(coords) < d:
            coords = coords + (0,) * (d - len(coords))
        self.N = N
        self.coords = coords

    @classmethod
    def rational(cls, q, N: int = 1) -> CyclotomicElement:
        return cls(N, (q,))

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> CyclotomicElement:
        """zeta_N ** k for the primitive root zeta_N = exp(2*pi*i/N)."""
        k %= N
        return cls(N, _reduce(N, [0] * k + [1]))

    # conversions
    def lift(self, L: int) -> CyclotomicElement:
        """Same element viewed in Q(zeta_L); N must divide L."""
        if L == self.N:
            return self
        if L % self.N:
            raise ContractError(f"cannot lift conductor {self.N} to {L}")
        step = L // self.N
        raw = [0] * (step * (len(self.coords) - 1) + 1)
        for j, c in enumerate(self.coords):
            raw[j * step] = c
        return CyclotomicElement(L, _reduce(L, raw))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.N)
        return sum((float(c) * z**j for j, c in enumerate(self.coords)), 0j)

    def to_mpc(self):
        import mpmath

        z = mpmath.exp(2j * mpmath.pi / self.N)
        return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * z**j if isinstance(c, Fraction)
                           else c * z**j for j, c in enumerate(self.coords))

    def trace(self):
        """Trace from Q(zeta_N) to Q."""
        return rat(sum((c * _ramanujan_sum(self.N, j) for j, c in enumerate(self.coords)), 0))

    def galois(self, a: int) -> CyclotomicElement:
        """Apply the automorphism zeta_N -> zeta_N**a (a coprime to N)."""
        if math.gcd(a, self.N) != 1:
            raise ContractError(f"{a} is not a unit mod {self.N}")
        raw = [0] * self.N
        for j, c in enumerate(self.coords):
            raw[(j * a) % self.N] += c
        return CyclotomicElement(self.N, _reduce(self.N, raw))

    def conjugate(self) -> CyclotomicElement:
        return self.galois(-1 % self.N if self.N > 1 else 1)

    def norm(self):
        """Field norm down to Q."""
        out = CyclotomicElement.rational(1, self.N)
        for a in range(1, self.N + 1):
            if math.gcd(a, self.N) == 1:
                out = out * self.galois(a)
        return out.to_rational()

    def multiplicative_order(self) -> int | None:
        """Order if this is a root of unity, else None.

        Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
        """
        if self.is_zero():
            return None
        w = lcm(2, self.N)
        one = CyclotomicElement.rational(1, self.N)
        if self ** w != one:
            return None
        return min(d for d in range(1, w + 1) if w % d == 0 and self ** d == one)

    # arithmetic
    def _common(self, other):
        if isinstance(other, CyclotomicElement):
            if other.N == self.N:
                return self, other
            L = lcm(self.N, other.N)
            return self.lift(L), other.lift(L)
        if is_rational(other):
            return self, CyclotomicElement(self.N, (other,))
        return None, None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CyclotomicElement(a.N, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.N, [-c for c in self.coords])

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CyclotomicElement(a.N, [x - y for x, y in zip(a.coords, b.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational(other):
            return CyclotomicElement(self.N, [c * other for c in self.coords])
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        raw = [0] * (2 * len(a.coords) - 1)
        for i, x in enumerate(a.coords):
            if x == 0:
                continue
            for j, y in enumerate(b.coords):
                if y != 0:
                    raw[i + j] += x * y
        return CyclotomicElement(a.N, _reduce(a.N, raw))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicElement(self.N, (Fraction(1) / Fraction(self.coords[0]),))
        g, s, _ = poly_xgcd(RatPoly(self.coords), cyclotomic_polynomial(self.N))
        assert g == 1
        return CyclotomicElement(self.N, s.coeffs)

    def __truediv__(self, other):
        if is_rational(other):
            return CyclotomicElement(self.N, [Fraction(c) / other for c in self.coords])
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicElement.rational(1, self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.coords == b.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash(("cyc", Fraction(self.trace()) / totient(self.N)))

    def __repr__(self):
        return f"CyclotomicElement({self.N}, {list(self.coords)!r})"

    def __str__(self):
        if self.is_rational():
            return str(self.coords[0])
        terms = []
        for j, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = "" if j == 0 else (f"z{self.N}" if j == 1 else f"z{self.N}^{j}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def as_cyclotomic(x, N: int = 1) -> CyclotomicElement:
    if isinstance(x, CyclotomicElement):
        return x
    return CyclotomicElement.rational(x, N)


def expand_roots(roots) -> list:
    """Coefficients (lowest first) of prod (x - r) over the roots' ring."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * r
        coeffs = nxt
    return coeffs


def rational_poly_from_roots(roots) -> RatPoly | None:
    """prod (x - r) as a RatPoly when every coefficient is rational, else None."""
    coeffs = expand_roots(roots)
    out = []
    for c in coeffs:
        if isinstance(c, CyclotomicElement):
            if not c.is_rational():
                return None
            c = c.to_rational()
        out.append(c)
    return RatPoly(out)
