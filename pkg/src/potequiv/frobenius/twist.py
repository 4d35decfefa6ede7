"""Hecke eigenvalue tables and detection of Dirichlet-character twists."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import CyclotomicElement, rat, totient
from .curves import ECModel, ExcludedPrime, count_points, legendre


@dataclass
class APTable:
    """a_p of a weight-k newform (or elliptic curve) of level N."""

    label: str
    ap: dict = field(default_factory=dict)
    weight: int = 2
    level: int = 1

    def ramanujan_violations(self) -> list[int]:
        """Primes where |a_p| exceeds 2 p^((k-1)/2), rounded up. Flagged only."""
        bad = []
        for p, a in self.ap.items():
            if isinstance(a, CyclotomicElement):
                continue
            # |a| <= ceil(2 p^((k-1)/2))  <=>  a^2 <= bound^2, done in integers
            bound = math.isqrt(4 * p ** (self.weight - 1))
            if bound * bound < 4 * p ** (self.weight - 1):
                bound += 1
            if abs(a) > bound:
                bad.append(p)
        return sorted(bad)


def ap_table_from_curve(E: ECModel, X: int, level: int, label: str = "") -> APTable:
    """a_p for odd good primes p <= X by point counting."""
    from ..density import prime_sieve

    ap = {}
    for p in prime_sieve(X):
        if p == 2:
            continue
        try:
            ap[p] = count_points(E, p)
        except ExcludedPrime:
            continue
    return APTable(label or f"curve{E}", ap, 2, level)


def units(q: int) -> list[int]:
    return [a for a in range(q) if math.gcd(a, q) == 1] if q > 1 else [0]


def kronecker_character(D: int, q: int) -> dict[int, int]:
    """Values of the quadratic character (D/.) on (Z/qZ)*.

    ``q`` must be a period of the character (a multiple of |D| for a
    fundamental discriminant D). Values are read off at primes in each
    class, which pins them down exactly.
    """
    values = {}
    for r in units(q):
        p = r if r > 1 else q + 1
        while not _is_odd_prime(p) or p % q != r % q or (D % p) == 0:
            p += q
        values[r] = legendre(D, p)
    return values


def _is_odd_prime(n: int) -> bool:
    from .curves import is_prime

    return n > 2 and is_prime(n)


def twist_ap_table(B: APTable, character: dict, q: int, label: str = "") -> APTable:
    """A with a_p(A) = chi(p mod q) a_p(B) at primes coprime to q."""
    ap = {p: character[p % q if q > 1 else 0] * a for p, a in B.ap.items() if math.gcd(p, q) == 1}
    level = B.level * q * q  # an upper bound for the twisted level
    return APTable(label or f"{B.label}x{q}", ap, B.weight, level)


class InsufficientData(Exception):
    """Some residue classes have too few usable primes to decide."""

    def __init__(self, missing: dict[int, int], needed: int):
        classes = ", ".join(f"{r} ({n} primes)" for r, n in sorted(missing.items()))
        super().__init__(f"inconclusive: need {needed} usable primes per class; short: {classes}")
        self.missing = missing
        self.needed = needed


@dataclass(frozen=True)
class TwistCharacter:
    modulus: int
    values: dict
    support: dict
    weight_mismatch: bool = False

    def __call__(self, n: int):
        return self.values[n % self.modulus if self.modulus > 1 else 0]

    def conjugate(self) -> TwistCharacter:
        vals = {r: v.conjugate() if isinstance(v, CyclotomicElement) else v for r, v in self.values.items()}
        return TwistCharacter(self.modulus, vals, self.support, self.weight_mismatch)

    def __eq__(self, other):
        if not isinstance(other, TwistCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.values == other.values


def _ratio(a, b):
    if isinstance(a, CyclotomicElement) or isinstance(b, CyclotomicElement):
        a = a if isinstance(a, CyclotomicElement) else CyclotomicElement.rational(a)
        return a / b
    return rat(Fraction(a) / Fraction(b))


def _is_unit_root(v, order: int) -> bool:
    if isinstance(v, CyclotomicElement):
        return v ** order == 1
    return v in (1, -1) and v**order == 1


def detect_twist_character(A: APTable, B: APTable, q: int, min_per_class: int = 3) -> TwistCharacter | None:
    """Find a Dirichlet character chi mod q with a_p(A) = chi(p) a_p(B).

    Usable primes are those in both tables, coprime to q and both levels.
    Returns None when no character fits the data (an inconsistent ratio,
    a ratio that is not a root of unity of order dividing phi(q), or a
    non-multiplicative assignment). Raises InsufficientData when some class
    of (Z/qZ)* has fewer than ``min_per_class`` primes with a_p(B) != 0.
    """
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    phi = totient(q)
    bad = q * A.level * B.level
    values: dict[int, object] = {}
    support = {r: 0 for r in units(q)}
    for p in sorted(set(A.ap) & set(B.ap)):
        if bad % p == 0:
            continue
        a, b = A.ap[p], B.ap[p]
        if b == 0:
            if a != 0:
                return None
            continue
        r = p % q if q > 1 else 0
        v = _ratio(a, b)
        if not _is_unit_root(v, phi):
            return None
        if r in values and values[r] != v:
            return None
        values[r] = v
        support[r] += 1
    missing = {r: n for r, n in support.items() if n < min_per_class}
    if missing:
        raise InsufficientData(missing, min_per_class)
    for a in values:
        for b in values:
            ab = (a * b) % q if q > 1 else 0
            if values[ab] != values[a] * values[b]:
                return None
    return TwistCharacter(q, values, support, A.weight != B.weight)
