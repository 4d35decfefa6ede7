"""Tori with a finite-order automorphism, the groups Z<J>, and their lattices.

Conventions
-----------
A torus point is a tuple of nonzero cyclotomic numbers t = (t_1, ..., t_k).
An integer matrix A acts by ``theta(t)_i = prod_j t_j ** A[i][j]``, so
theta^k corresponds to A^k. Lattice computations (``decompose``) use the
same A acting on integer column vectors; a character lambda, evaluated as
``prod_i t_i ** lambda_i``, pulls back along theta to ``A^T lambda``.

The group Z<J> has elements (t, a), a mod n, with
``(x, a)(y, b) = (x * theta^a(y), a + b)``. An optional theta-fixed central
point c makes J^n = c instead of 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    ContractError,
    CyclotomicElement,
    DimensionError,
    Matrix,
    hermite_basis,
    integer_kernel,
    matrix_order,
    rational_kernel,
)
from .algebra.lattice import DEFAULT_ORDER_CAP, clear_denominators


class UnsupportedError(ValueError):
    """The operation needs a finite group of theta-invariants."""


class LatticeAutomorphism:
    """A unimodular integer matrix of finite order n."""

    def __init__(self, A, cap: int = DEFAULT_ORDER_CAP):
        A = A if isinstance(A, Matrix) else Matrix(A)
        if not A.is_square() or not A.is_integral():
            raise ContractError("lattice automorphism must be a square integer matrix")
        n = matrix_order(A, cap)
        if n is None:
            raise ContractError(f"matrix has infinite order or order above the matrix_order cap {cap}")
        self.A = A
        self.n = n
        self.k = A.nrows
        self._powers = [Matrix.identity(self.k)]
        for _ in range(1, n):
            self._powers.append(self._powers[-1] * A)

    def power(self, e: int) -> Matrix:
        return self._powers[e % self.n]

    def norm_matrix(self) -> Matrix:
        """N_theta = 1 + A + ... + A^(n-1)."""
        out = Matrix.zeros(self.k)
        for P in self._powers:
            out = out + P
        return out

    def __eq__(self, other):
        return isinstance(other, LatticeAutomorphism) and self.A == other.A

    def __hash__(self):
        return hash(self.A)

    def __repr__(self):
        return f"LatticeAutomorphism({self.A}, n={self.n})"


def _cyc(x) -> CyclotomicElement:
    return x if isinstance(x, CyclotomicElement) else CyclotomicElement.rational(x)


@dataclass(frozen=True)
class TorusPoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(_cyc(c) for c in self.coords)
        if any(c.is_zero() for c in coords):
            raise ContractError("torus coordinates must be nonzero")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def identity(cls, k: int) -> TorusPoint:
        return cls((1,) * k)

    @property
    def k(self) -> int:
        return len(self.coords)

    def __mul__(self, other: TorusPoint) -> TorusPoint:
        if self.k != other.k:
            raise DimensionError(f"torus points of dimensions {self.k} and {other.k}")
        return TorusPoint(tuple(a * b for a, b in zip(self.coords, other.coords)))

    def __pow__(self, e: int) -> TorusPoint:
        return TorusPoint(tuple(c**e for c in self.coords))

    def inverse(self) -> TorusPoint:
        return self ** -1

    def character(self, lam) -> CyclotomicElement:
        """lambda(t) = prod t_i ** lambda_i."""
        if len(lam) != self.k:
            raise DimensionError("character and point dimensions differ")
        out = CyclotomicElement.rational(1)
        for c, e in zip(self.coords, lam):
            if e:
                out = out * c**e
        return out

    def is_identity(self) -> bool:
        return all(c == 1 for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def theta_apply(theta: LatticeAutomorphism, t: TorusPoint, power: int = 1) -> TorusPoint:
    """theta^power(t); coordinate i is prod_j t_j ** (A^power)[i][j]."""
    if t.k != theta.k:
        raise DimensionError(f"point of dimension {t.k} for a rank-{theta.k} automorphism")
    A = theta.power(power)
    return TorusPoint(tuple(t.character(A.row(i)) for i in range(theta.k)))


def twisted_product(theta: LatticeAutomorphism, x: TorusPoint, m: int) -> TorusPoint:
    """x * theta(x) * ... * theta^(m-1)(x)."""
    out = TorusPoint.identity(x.k)
    for i in range(m):
        out = out * theta_apply(theta, x, i)
    return out


def norm_map(theta: LatticeAutomorphism, t: TorusPoint) -> TorusPoint:
    """x * theta(x) * ... * theta^(n-1)(x), which is theta-invariant."""
    out = twisted_product(theta, t, theta.n)
    assert theta_apply(theta, out) == out, "norm map output is not theta-invariant"
    return out


def invariant_order(theta: LatticeAutomorphism):
    """Order of the theta-fixed subgroup {x : x^(A - I) = 1}: |det(A - I)|, or inf."""
    d = (theta.A - Matrix.identity(theta.k)).det()
    return abs(d) if d != 0 else math.inf


class SemidirectGroup:
    """Z<J> = Z x| Z/nZ for the torus Z of rank k, J acting by theta."""

    def __init__(self, theta: LatticeAutomorphism, central: TorusPoint | None = None):
        self.theta = theta
        self.n = theta.n
        self.k = theta.k
        if central is not None and theta_apply(theta, central) != central:
            raise ContractError("central twist must be theta-invariant")
        self.central = central

    def element(self, t, a: int = 0) -> SemidirectElement:
        t = t if isinstance(t, TorusPoint) else TorusPoint(tuple(t))
        if t.k != self.k:
            raise DimensionError(f"point of dimension {t.k} in a rank-{self.k} group")
        return SemidirectElement(self, t, a % self.n)

    def identity(self) -> SemidirectElement:
        return self.element(TorusPoint.identity(self.k), 0)

    def J(self) -> SemidirectElement:
        return self.element(TorusPoint.identity(self.k), 1)

    def __eq__(self, other):
        return isinstance(other, SemidirectGroup) and self.theta == other.theta and self.central == other.central

    def __hash__(self):
        return hash((self.theta, self.central))


@dataclass(frozen=True, eq=False)
class SemidirectElement:
    group: SemidirectGroup
    t: TorusPoint
    a: int

    def __mul__(self, other: SemidirectElement) -> SemidirectElement:
        return group_mul(self, other)

    def __pow__(self, e: int) -> SemidirectElement:
        if e < 0:
            raise ValueError("negative powers not supported")
        out = self.group.identity()
        for _ in range(e):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return self.a == 0 and self.t.is_identity()

    def __eq__(self, other):
        return (isinstance(other, SemidirectElement) and self.group == other.group
                and self.a == other.a and self.t == other.t)

    def __hash__(self):
        return hash((self.t, self.a))

    def __str__(self):
        return f"({self.t}, J^{self.a})"


def group_mul(g: SemidirectElement, h: SemidirectElement) -> SemidirectElement:
    """(x, a)(y, b) = (x theta^a(y) [c if a + b wraps], a + b mod n)."""
    G = g.group
    if h.group != G:
        raise ContractError("elements of different groups")
    t = g.t * theta_apply(G.theta, h.t, g.a)
    if G.central is not None and g.a + h.a >= G.n:
        t = t * G.central
    return SemidirectElement(G, t, (g.a + h.a) % G.n)


def coset_element_order(g: SemidirectElement) -> int:
    """Order of g = (x, J); at most m*n when the theta-invariants have order m."""
    if g.a != 1 % g.group.n:
        raise ContractError("coset_element_order expects an element of the coset xJ")
    m = invariant_order(g.group.theta)
    if m == math.inf:
        raise UnsupportedError("theta-invariants are infinite; coset elements may have infinite order")
    limit = m * g.group.n
    power = g
    for k in range(1, limit + 1):
        if power.is_identity():
            assert k <= limit
            return k
        power = power * g
    raise AssertionError(f"coset element order exceeds m*n = {limit}")


# --- character lattice decomposition --------------------------------------

@dataclass(frozen=True)
class LatticeDecomposition:
    fixed_basis: tuple            # saturated Z-basis of ker(A - I)
    y_basis: tuple                # Q-basis of Y = ker N_theta
    L0: tuple                     # integer basis of the chosen lattice in Y
    Ltheta_basis: tuple           # Hermite basis of sum_i A^i L0
    restricted: Matrix | None     # A on L_theta in the Ltheta basis
    invariant_order: object       # |det(A|L_theta - I)| or inf

    @property
    def fixed_rank(self) -> int:
        return len(self.fixed_basis)

    @property
    def y_rank(self) -> int:
        return len(self.y_basis)


def _span_stable(A: Matrix, basis) -> bool:
    return hermite_basis([A.apply(v) for v in basis]) == list(basis)


def _restrict(A: Matrix, basis) -> Matrix:
    """Integer matrix R with A B = B R, for B the columns ``basis``."""
    B = Matrix.from_columns(basis)
    Bt = B.T
    R = (Bt * B).inverse() * Bt * A * B
    if not R.is_integral() or B * R != A * B:
        raise AssertionError("lattice is not A-stable")
    return R


def decompose(theta: LatticeAutomorphism, L0=None) -> LatticeDecomposition:
    A, k = theta.A, theta.k
    ident = Matrix.identity(k)
    N = theta.norm_matrix()
    fixed = tuple(integer_kernel(A - ident))
    ybasis = tuple(rational_kernel(N))
    if L0 is None:
        L0 = tuple(clear_denominators(v) for v in ybasis)
    else:
        L0 = tuple(tuple(int(a) for a in v) for v in L0)
        for v in L0:
            if len(v) != k:
                raise DimensionError(f"L0 vector {v} has wrong length")
            if any(N.apply(v)):
                raise ContractError(f"L0 vector {v} is not in Y = ker N_theta")
    gens = [theta.power(i).apply(v) for i in range(theta.n) for v in L0]
    Ltheta = tuple(hermite_basis(gens))
    if Ltheta:
        R = _restrict(A, Ltheta)
        d = (R - Matrix.identity(R.nrows)).det()
        m = abs(d) if d != 0 else math.inf
    else:
        R, m = None, 1

    for v in fixed:
        assert A.apply(v) == tuple(v), "fixed basis vector moved by theta"
    for v in ybasis:
        assert not any(N.apply(v)), "Y basis vector not killed by N_theta"
    assert len(fixed) + len(ybasis) == k, "rank(X^theta) + rank(Y) != k"
    assert _span_stable(A, Ltheta), "L_theta is not theta-stable"
    return LatticeDecomposition(fixed, ybasis, L0, Ltheta, R, m)


# --- monomial representations ---------------------------------------------

class MonomialRep:
    """Representation of Z<J> induced from the character lambda of Z.

    Basis e_0..e_{n-1}; x in Z acts on e_j by lambda(theta^-j(x)); J sends
    e_j to e_{j+1}, and e_{n-1} to lambda(c) e_0 when J^n = c.
    """

    def __init__(self, group: SemidirectGroup, lam):
        lam = tuple(int(a) for a in lam)
        if len(lam) != group.k:
            raise DimensionError("character length differs from torus rank")
        self.group = group
        self.lam = lam
        self.dim = group.n

    def torus_matrix(self, t: TorusPoint) -> Matrix:
        G = self.group
        return Matrix.diag([theta_apply(G.theta, t, -j).character(self.lam) for j in range(self.dim)])

    def shift_matrix(self) -> Matrix:
        n = self.dim
        wrap = self.group.central.character(self.lam) if self.group.central is not None else CyclotomicElement.rational(1)
        rows = [[0] * n for _ in range(n)]
        for j in range(n):
            if j + 1 < n:
                rows[j + 1][j] = 1
            else:
                rows[0][j] = wrap
        return Matrix(rows)


def rep_matrix(R: MonomialRep, g: SemidirectElement) -> Matrix:
    if g.group != R.group:
        raise ContractError("element and representation belong to different groups")
    return R.torus_matrix(g.t) * (R.shift_matrix() ** g.a)


@dataclass(frozen=True)
class TraceIdentityReport:
    m: int
    dimension: int
    traces: tuple
    passed: tuple

    @property
    def all_passed(self) -> bool:
        return all(self.passed)


def trace_identity_check(R: MonomialRep, m: int, samples) -> TraceIdentityReport:
    """Check dim == Tr rep(x theta(x) ... theta^(m-1)(x)) at each sampled x.

    The left side is Tr of the m-th power of the trivial representation of
    the same dimension.
    """
    G = R.group
    if m % G.n:
        raise ContractError(f"m = {m} must be a multiple of n = {G.n}")
    traces, passed = [], []
    for x in samples:
        P = twisted_product(G.theta, x, m)
        tr = rep_matrix(R, G.element(P, 0)).trace()
        traces.append(tr)
        passed.append(tr == R.dim)
    return TraceIdentityReport(m, R.dim, tuple(traces), tuple(passed))


def commutant_check(R: MonomialRep) -> bool:
    """Whether rep(Z) commutes with rep(J), tested at lattice-generator points.

    The generator points carry the value 2 (not a root of unity) in one
    coordinate, so commuting there forces all lambda o theta^-j to agree.
    """
    G = R.group
    S = R.shift_matrix()
    for i in range(G.k):
        t = TorusPoint(tuple(2 if j == i else 1 for j in range(G.k)))
        D = R.torus_matrix(t)
        if D * S != S * D:
            return False
    return True


def random_torus_point(k: int, rng: random.Random, height: int = 9) -> TorusPoint:
    """Point with random nonzero rational coordinates of bounded height."""
    coords = []
    for _ in range(k):
        num = 0
        while num == 0:
            num = rng.randint(-height, height)
        coords.append(Fraction(num, rng.randint(1, height)))
    return TorusPoint(tuple(coords))
