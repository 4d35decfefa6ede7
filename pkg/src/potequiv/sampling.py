"""Random pairs of semisimple classes with known equivalence status.

Twisted pairs are built from Galois orbits inside cyclotomic fields so
both characteristic polynomials come out rational: a block of eigenvalues
{sigma(beta)} is paired with {sigma(beta) * zeta_sigma}, and the product
prod (x - beta_i zeta_i) is expanded exactly and kept only when rational.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .algebra import CyclotomicElement, RatPoly, lcm, rational_poly_from_roots
from .core import SemisimpleClass

Z = CyclotomicElement.zeta

# (generator s, its Galois conjugate) for a few quadratic fields
_QUADRATIC = {
    "i": (Z(4), -Z(4)),
    "sqrt-3": (2 * Z(3) + 1, -(2 * Z(3) + 1)),
    "sqrt2": (Z(8) + Z(8, 7), -(Z(8) + Z(8, 7))),
    "sqrt3": (Z(12) + Z(12, 11), -(Z(12) + Z(12, 11))),
    "sqrt5": (2 * (Z(5) + Z(5, 4)) + 1, -(2 * (Z(5) + Z(5, 4)) + 1)),
    "sqrt-2": (Z(8) + Z(8, 3), -(Z(8) + Z(8, 3))),
}
# Galois orbit of zeta7 + zeta7^-1, generating the real cubic subfield of Q(zeta7)
_CUBIC = tuple(Z(7, j) + Z(7, 7 - j) for j in (1, 2, 3))


@dataclass(frozen=True)
class SampledPair:
    f: SemisimpleClass
    g: SemisimpleClass
    twist_order: int | None   # lcm of the planted root-of-unity orders
    kind: str


def _nonzero(rng: random.Random, lo: int, hi: int) -> int:
    v = 0
    while v == 0:
        v = rng.randint(lo, hi)
    return v


def _rational_block(rng, room):
    """(f_roots, g_roots, order) for an integer eigenvalue twisted by an orbit."""
    a = _nonzero(rng, -9, 9)
    options = [1, 2] + ([3, 4, 6] if room >= 2 else [])
    k = rng.choice(options)
    if k in (1, 2):
        return [a], [a * (1 if k == 1 else -1)], k
    j = rng.choice([u for u in range(1, k) if math.gcd(u, k) == 1])
    z = Z(k, j)
    return [a, a], [a * z, a * z.conjugate()], k


@lru_cache(maxsize=None)
def _quadratic_twists(field: str, pure: bool) -> dict:
    """order -> [(k, j1, j2)] with (x - b zeta_k^j1)(x - b' zeta_k^j2) rational.

    Found once per field using the representative b = s (pure) or 1 + s;
    ``order`` is the lcm of the orders of the two roots of unity.
    """
    s, s_conj = _QUADRATIC[field]
    beta, beta_c = (s, s_conj) if pure else (1 + s, 1 + s_conj)
    out: dict[int, list] = {}
    for k in range(1, 13):
        for j1 in range(k):
            for j2 in range(k):
                order = lcm(k // math.gcd(j1, k), k // math.gcd(j2, k))
                if order != k:
                    continue
                if rational_poly_from_roots([beta * Z(k, j1), beta_c * Z(k, j2)]) is not None:
                    out.setdefault(order, []).append((k, j1, j2))
    return out


def _quadratic_block(rng):
    field = rng.choice(sorted(_QUADRATIC))
    s, s_conj = _QUADRATIC[field]
    pure = rng.random() < 0.5
    a, b = (0 if pure else _nonzero(rng, -6, 6)), _nonzero(rng, -4, 4)
    beta, beta_c = a + b * s, a + b * s_conj
    table = _quadratic_twists(field, pure)
    order = rng.choice(sorted(table))
    combos = list(table[order])
    rng.shuffle(combos)
    for k, j1, j2 in combos[:10]:
        z1, z2 = Z(k, j1), Z(k, j2)
        roots = [beta * z1, beta_c * z2]
        if rational_poly_from_roots(roots) is not None:
            return [beta, beta_c], roots, order
    return [beta, beta_c], [beta, beta_c], 1


def _cubic_block(rng):
    a, b = rng.randint(-5, 5), _nonzero(rng, -3, 3)
    roots = [a + b * e for e in _CUBIC]
    sign = rng.choice([1, -1])
    return roots, [sign * r for r in roots], 1 if sign == 1 else 2


def twisted_pair(rng: random.Random, max_degree: int = 3) -> SampledPair:
    """g has eigenvalues alpha_i * zeta_i for roots of unity of order <= 12."""
    while True:
        n = rng.randint(1, max_degree)
        f_roots, g_roots, orders = [], [], []
        room = n
        while room > 0:
            kinds = ["rational"] + (["quadratic"] if room >= 2 else []) + (["cubic"] if room >= 3 else [])
            kind = rng.choice(kinds)
            if kind == "rational":
                fr, gr, k = _rational_block(rng, room)
            elif kind == "quadratic":
                fr, gr, k = _quadratic_block(rng)
            else:
                fr, gr, k = _cubic_block(rng)
            f_roots += fr
            g_roots += gr
            orders.append(k)
            room -= len(fr)
        f = rational_poly_from_roots(f_roots)
        g = rational_poly_from_roots(g_roots)
        if f is None or g is None or f[0] == 0:
            continue
        return SampledPair(SemisimpleClass(f), SemisimpleClass(g), lcm(*orders), "twisted")


def random_class(rng: random.Random, n: int, height: int = 9) -> SemisimpleClass:
    coeffs = [_nonzero(rng, -height, height)] + [rng.randint(-height, height) for _ in range(n - 1)] + [1]
    return SemisimpleClass(RatPoly(coeffs))


def control_pair(rng: random.Random, max_degree: int = 3) -> SampledPair:
    """g(x) = c^n f(x / c) with |c| >= 2: every eigenvalue scaled by c.

    The product of the n eigenvalue ratios has modulus |c|^n != 1, so no
    matching of eigenvalues can consist of roots of unity.
    """
    n = rng.randint(1, max_degree)
    f = random_class(rng, n)
    c = rng.choice([-1, 1]) * rng.randint(2, 5)
    g = RatPoly([a * c ** (n - i) for i, a in enumerate(f.charpoly.coeffs)])
    return SampledPair(f, SemisimpleClass(g), None, "control")


def same_norm_pair(rng: random.Random, max_degree: int = 3) -> SampledPair:
    """Random pair with g(0) = +-f(0): unconstrained, usually inequivalent."""
    n = rng.randint(1, max_degree)
    f = random_class(rng, n)
    g = random_class(rng, n)
    g = RatPoly((rng.choice([-1, 1]) * f.charpoly[0],) + g.charpoly.coeffs[1:])
    return SampledPair(f, SemisimpleClass(g), None, "same-norm")


def mixed_pairs(rng: random.Random, count: int, max_degree: int = 3) -> list[SampledPair]:
    makers = (twisted_pair, control_pair, same_norm_pair)
    return [makers[i % 3](rng, max_degree) for i in range(count)]
