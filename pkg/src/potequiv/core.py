"""Deciding local potential equivalence of two semisimple conjugacy classes.

A class in GL_n is represented by its monic characteristic polynomial; for
semisimple elements that determines the class. Two classes are potentially
equivalent when some power of one is conjugate to the same power of the
other, i.e. when their eigenvalues match up to roots of unity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import ContractError, RatPoly, divisors, lcm, power_charpoly, power_sum
from .algebra.arith import orders_with_totient_at_most
from .algebra.poly import poly_gcd, squarefree_part


@dataclass(frozen=True)
class SemisimpleClass:
    """Conjugacy class of a semisimple element of GL_n(Q-bar), by charpoly."""

    charpoly: RatPoly

    def __post_init__(self):
        f = self.charpoly
        if not isinstance(f, RatPoly):
            object.__setattr__(self, "charpoly", f := RatPoly(f))
        if not f.is_monic() or f.degree < 1:
            raise ContractError(f"charpoly must be monic of degree >= 1: {f}")
        if f[0] == 0:
            raise ContractError(f"charpoly has root 0, not in GL_n: {f}")

    @classmethod
    def from_high(cls, coeffs) -> SemisimpleClass:
        return cls(RatPoly.from_high(coeffs))

    @property
    def n(self) -> int:
        return self.charpoly.degree

    def __str__(self):
        return str(self.charpoly)


def _as_class(f) -> SemisimpleClass:
    if isinstance(f, SemisimpleClass):
        return f
    return SemisimpleClass(f if isinstance(f, RatPoly) else RatPoly(f))


def _same_degree(f, g):
    f, g = _as_class(f), _as_class(g)
    if f.n != g.n:
        raise ContractError(f"degree mismatch: {f.n} vs {g.n}")
    return f, g


@dataclass(frozen=True)
class PotEquivVerdict:
    equivalent: bool
    minimal_exponent: int | None
    bound_used: int
    certificate: RatPoly | None
    degree_bound: int

    def __str__(self):
        if self.equivalent:
            return f"equivalent m={self.minimal_exponent} (bound {self.bound_used})"
        return f"not equivalent (bound {self.bound_used})"


# --- exponent bounds -------------------------------------------------------

def max_root_of_unity_order(D: int) -> int:
    """Largest w with phi(w) <= D: the most roots of unity a degree-D field holds."""
    return max(orders_with_totient_at_most(D))


def factorial_bound(m0: int) -> int:
    return math.factorial(m0)


def exponent_bound(D: int, factorial: bool = False) -> int:
    """Uniform exponent killing every root-of-unity ratio of degree <= D.

    Default is lcm{k : phi(k) <= D}. With ``factorial=True`` returns the
    coarser m0! where m0 = max{k : phi(k) <= D}.
    """
    if D < 1:
        raise ContractError(f"degree bound must be >= 1, got {D}")
    if factorial:
        return factorial_bound(max_root_of_unity_order(D))
    return lcm(*orders_with_totient_at_most(D))


# --- degree bounds ---------------------------------------------------------

def _integral_rescale(f: RatPoly) -> tuple[RatPoly, int]:
    """(h, c) with h(y) = c^n f(y/c) monic integral."""
    c = f.content_scale()
    n = f.degree
    return RatPoly([a * c ** (n - i) for i, a in enumerate(f.coeffs)]), c


def rational_roots(f: RatPoly) -> list:
    """Distinct rational roots of f.

    Candidates come from floating-point roots of the squarefree part and
    are confirmed by exact evaluation, so a reported root is always a root;
    a root missed by the float step only makes downstream bounds looser.
    """
    sf = squarefree_part(f)
    h, c = _integral_rescale(sf)
    try:
        approx = np.roots([float(a) for a in h.high_coeffs()])
    except (OverflowError, np.linalg.LinAlgError):
        return []
    found = []
    for z in approx:
        if not np.isfinite(z):
            continue
        if abs(z.imag) > 1e-6 * max(1.0, abs(z)):
            continue
        for cand in {math.floor(z.real), math.ceil(z.real)}:
            if h(cand) == 0 and Fraction(cand, c) not in found:
                found.append(Fraction(cand, c))
    return found


def factor_degree_profile(f: RatPoly) -> list[int]:
    """Degrees of a factorization of f into blocks, each block at least
    as large as the minimal polynomial of any root it carries.

    Rational roots split off as degree-1 blocks; the rest forms one block,
    which is irreducible whenever its degree is at most 3.
    """
    sf = squarefree_part(f)
    roots = rational_roots(sf)
    rest = sf
    for r in roots:
        rest = rest // RatPoly((-r, 1))
    return [1] * len(roots) + ([rest.degree] if rest.degree > 0 else [])


def degree_bound(f, g, mode: str = "default") -> int:
    """Upper bound on the degree over Q of any eigenvalue ratio alpha_i/beta_j.

    ``default``: (n!)^2, the degree of the compositum of both splitting fields.
    ``exact``: max deg(A)*deg(B) over factor blocks A of f and B of g, capped
    by (n!)^2; a ratio of roots of A and B lies in a field of that degree.
    """
    f, g = _same_degree(f, g)
    n = f.n
    cap = math.factorial(n) ** 2
    if mode == "default":
        return cap
    if mode != "exact":
        raise ValueError(f"unknown degree-bound mode {mode!r}")
    da = factor_degree_profile(f.charpoly)
    db = factor_degree_profile(g.charpoly)
    return min(cap, max(a * b for a in da for b in db))


# --- membership and decision ----------------------------------------------

def in_X_m(f, g, m: int) -> bool:
    """Tr(g1^m) == Tr(g2^m)."""
    f, g = _same_degree(f, g)
    return power_sum(f.charpoly, m) == power_sum(g.charpoly, m)


def in_Y_m(f, g, m: int) -> bool:
    """g1^m and g2^m are conjugate (all exterior-power traces agree)."""
    f, g = _same_degree(f, g)
    return power_charpoly(f.charpoly, m) == power_charpoly(g.charpoly, m)


def locally_pot_equiv(f, g, mode: str = "exact", bound: int | None = None) -> PotEquivVerdict:
    """Decide whether some power of f's class is conjugate to that power of g's.

    Scans the divisors of M = exponent_bound(degree_bound(f, g)) in increasing
    order and returns the first working exponent. Every working exponent is a
    multiple of one of these divisors, so the scan is complete and the
    exponent found is the minimal one.
    """
    f, g = _same_degree(f, g)
    D = degree_bound(f, g, mode)
    M = bound if bound is not None else exponent_bound(D)
    for m in divisors(M):
        pf = power_charpoly(f.charpoly, m)
        if pf == power_charpoly(g.charpoly, m):
            return PotEquivVerdict(True, m, M, pf, D)
    return PotEquivVerdict(False, None, M, None, D)


# --- numeric oracle -------------------------------------------------------

@dataclass(frozen=True)
class RatioDiagnostic:
    i: int
    j: int
    ratio: complex
    unit_modulus: bool
    order: int | None


@dataclass(frozen=True)
class OracleDiagnostic:
    conclusive: bool
    equivalent: bool | None
    minimal_exponent: int | None
    ratios: tuple[RatioDiagnostic, ...]
    reason: str = ""


def _distinct_roots(f: RatPoly, dps: int):
    """Numeric (root, multiplicity) pairs of f, via Yun's squarefree split."""
    import mpmath

    out = []
    c = poly_gcd(f, f.derivative())
    w = f // c
    k = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = (w // y).monic()
        if z.degree == 1:
            out.append((mpmath.mpf(_mpf(-z[0])), k))
        elif z.degree > 1:
            coeffs = [_mpf(x) for x in z.high_coeffs()]
            out.extend((r, k) for r in mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps))
        w, c = y, c // y
        k += 1
    return out


def _mpf(q):
    import mpmath

    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def _mpf_to_fraction(x) -> Fraction:
    man, exp = x.man_exp
    return Fraction(man) * Fraction(2) ** exp


def numeric_ratio_oracle(f, g, precision: int = 80, tol_exp: int = 20) -> OracleDiagnostic:
    """Floating-point cross-check of potential equivalence. Advisory only.

    Flags eigenvalue ratios whose modulus is within 10**-tol_exp of 1 and
    whose angle is within 10**-tol_exp of 2*pi*a/k with k at most
    lcm{k : phi(k) <= n^2} (a ratio of two roots lies in a field of degree
    at most n^2). Equivalent iff the flagged ratios admit a perfect matching.
    """
    import mpmath

    f, g = _same_degree(f, g)
    n = f.n
    if precision < 2 * tol_exp:
        return OracleDiagnostic(False, None, None, (), "precision too low for tolerance")
    K = exponent_bound(n * n)
    with mpmath.workdps(precision):
        tol = mpmath.mpf(10) ** (-tol_exp)
        sep = mpmath.mpf(10) ** (-(precision // 2))
        try:
            fr, gr = _distinct_roots(f.charpoly, precision), _distinct_roots(g.charpoly, precision)
        except mpmath.libmp.NoConvergence:
            return OracleDiagnostic(False, None, None, (), "root finder did not converge")
        for roots in (fr, gr):
            for (a, _), (b, _) in itertools.combinations(roots, 2):
                if mpmath.fabs(a - b) < sep * max(1, mpmath.fabs(a)):
                    return OracleDiagnostic(False, None, None, (), "roots not separated")
        alphas = [r for r, k in fr for _ in range(k)]
        betas = [r for r, k in gr for _ in range(k)]
        diags = []
        order = {}
        for i, a in enumerate(alphas):
            for j, b in enumerate(betas):
                r = mpmath.mpc(b) / a
                unit = mpmath.fabs(mpmath.fabs(r) - 1) < tol
                k = None
                if unit:
                    turn = mpmath.arg(r) / (2 * mpmath.pi)
                    turn -= mpmath.floor(turn)
                    approx = _mpf_to_fraction(turn).limit_denominator(K)
                    if mpmath.fabs(turn - _mpf(approx)) < tol:
                        k = approx.denominator
                diags.append(RatioDiagnostic(i, j, complex(r), bool(unit), k))
                if k is not None:
                    order[i, j] = k
    best = None
    for perm in itertools.permutations(range(n)):
        if all((i, perm[i]) in order for i in range(n)):
            m = lcm(*(order[i, perm[i]] for i in range(n)))
            best = m if best is None else min(best, m)
    return OracleDiagnostic(True, best is not None, best, tuple(diags))
