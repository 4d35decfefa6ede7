"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arith import ContractError, rat


class RatPoly:
    """Immutable polynomial over Q, coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        c = [rat(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._hash = None

    # construction helpers
    @classmethod
    def x(cls) -> RatPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, a) -> RatPoly:
        return cls((a,))

    @classmethod
    def from_high(cls, coeffs) -> RatPoly:
        """Build from coefficients listed highest degree first."""
        return cls(list(coeffs)[::-1])

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> RatPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots) -> RatPoly:
        """Monic polynomial with the given rational roots."""
        out = cls((1,))
        for r in roots:
            out = out * cls((-rat(r), 1))
        return out

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self.coeffs)

    def high_coeffs(self) -> list:
        return list(self.coeffs[::-1])

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, RatPoly):
            return other
        try:
            return RatPoly((other,))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            try:
                k = rat(other)
            except TypeError:
                return NotImplemented
            return RatPoly([a * k for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = RatPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, k):
        k = rat(k)
        return RatPoly([Fraction(a) / k for a in self.coeffs])

    def __divmod__(self, other: RatPoly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lead
        if len(rem) - 1 < db:
            return RatPoly(), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c if lead == 1 else Fraction(c) / lead
            quot[i - db] = q
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] -= q * b
        return RatPoly(quot), RatPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == RatPoly((other,)).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatPoly", self.coeffs))
        return self._hash

    def __call__(self, x):
        """Horner evaluation; works for any ring element supporting + and *."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    # algebra
    def monic(self) -> RatPoly:
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self / self.lead if self.lead != 1 else self

    def derivative(self) -> RatPoly:
        return RatPoly([i * a for i, a in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, modulus: RatPoly) -> RatPoly:
        result, base = RatPoly((1,)) % modulus, self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def content_scale(self) -> int:
        """Least c > 0 such that c * self has integer coefficients."""
        from math import lcm

        return lcm(*(Fraction(a).denominator for a in self.coeffs)) if self.coeffs else 1

    def __repr__(self):
        return f"RatPoly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_xgcd(a: RatPoly, b: RatPoly):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = RatPoly((1,)), RatPoly()
    t0, t1 = RatPoly(), RatPoly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.lead
    return r0 / lead, s0 / lead, t0 / lead


def squarefree_part(f: RatPoly) -> RatPoly:
    return (f // poly_gcd(f, f.derivative())).monic()


def power_sums(f: RatPoly, upto: int) -> list:
    """Power sums s_0..s_upto of the roots of monic ``f`` by Newton's identities."""
    if not f.is_monic():
        raise ContractError("power sums need a monic polynomial")
    n = f.degree
    a = f.coeffs  # a[n] == 1
    s = [n]
    for k in range(1, upto + 1):
        acc = k * a[n - k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            acc += a[n - i] * s[k - i]
        s.append(rat(-acc))
    return s


def power_sum(f: RatPoly, m: int):
    """Sum of m-th powers of the roots of monic ``f`` (the trace of g**m)."""
    if m < 0:
        raise ContractError(f"power_sum needs m >= 0, got {m}")
    return power_sums(f, m)[m]


def newton_to_monic(sums: list, n: int) -> RatPoly:
    """Monic degree-n polynomial whose roots have power sums ``sums[1..n]``."""
    e = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * sums[i]
        e.append(acc / k)
    return RatPoly([(-1) ** k * e[k] for k in range(n, -1, -1)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> RatPoly:
    """Phi_k, obtained by dividing x^k - 1 by Phi_d for every proper divisor d."""
    if k < 1:
        raise ContractError(f"cyclotomic index must be >= 1, got {k}")
    f = RatPoly.monomial(k) - 1
    for d in range(1, k):
        if k % d == 0:
            f = f // cyclotomic_polynomial(d)
    return f
