import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from potequiv.algebra import ContractError, CyclotomicElement, Matrix
from potequiv.torus import (
    LatticeAutomorphism,
    MonomialRep,
    SemidirectGroup,
    TorusPoint,
    UnsupportedError,
    coset_element_order,
    commutant_check,
    decompose,
    invariant_order,
    norm_map,
    random_torus_point,
    rep_matrix,
    theta_apply,
    trace_identity_check,
    twisted_product,
)

INVERSION = [[-1]]
INVERSION2 = [[-1, 0], [0, -1]]
ROT4 = [[0, 1], [-1, 0]]
CYCLE3 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
ROT3 = [[0, 1], [-1, -1]]
EXAMPLES = [INVERSION, ROT4, CYCLE3, ROT3]


def points(k, seed, count):
    rng = random.Random(seed)
    return [random_torus_point(k, rng) for _ in range(count)]


@pytest.mark.parametrize("A, n, m", [(INVERSION, 2, 2), (INVERSION2, 2, 4), (ROT4, 4, 2), (CYCLE3, 3, math.inf), (ROT3, 3, 3)])
def test_orders(A, n, m):
    theta = LatticeAutomorphism(A)
    assert theta.n == n
    # |det(A - I)| computed by hand for each example
    assert invariant_order(theta) == m


def test_infinite_order_rejected():
    with pytest.raises(ContractError, match="matrix_order cap"):
        LatticeAutomorphism([[1, 1], [0, 1]])
    with pytest.raises(ContractError):
        LatticeAutomorphism([[2, 0], [0, 1]])


@pytest.mark.parametrize("A", EXAMPLES)
def test_norm_matrix_vanishes_when_invariants_finite(A):
    theta = LatticeAutomorphism(A)
    I = Matrix.identity(theta.k)
    if (theta.A - I).det() != 0:
        assert theta.norm_matrix() == Matrix.zeros(theta.k)
    assert (theta.A - I) * theta.norm_matrix() == Matrix.zeros(theta.k)


@pytest.mark.parametrize("A", EXAMPLES)
def test_norm_map_invariant_and_killed(A):
    theta = LatticeAutomorphism(A)
    m = invariant_order(theta)
    for x in points(theta.k, 1, 30):
        N = norm_map(theta, x)
        assert theta_apply(theta, N) == N
        if m != math.inf:
            assert (N ** m).is_identity()


def test_norm_of_three_cycle():
    theta = LatticeAutomorphism(CYCLE3)
    assert norm_map(theta, TorusPoint((2, 3, 5))) == TorusPoint((30, 30, 30))


def test_theta_is_action():
    theta = LatticeAutomorphism(ROT3)
    for x, y in zip(points(2, 2, 20), points(2, 3, 20)):
        assert theta_apply(theta, x * y) == theta_apply(theta, x) * theta_apply(theta, y)
        assert theta_apply(theta, theta_apply(theta, x)) == theta_apply(theta, x, 2)
        assert theta_apply(theta, x, theta.n) == x


@pytest.mark.parametrize("A", EXAMPLES)
def test_decompose_invariants(A):
    theta = LatticeAutomorphism(A)
    d = decompose(theta)
    N = theta.norm_matrix()
    for v in d.fixed_basis:
        assert theta.A.apply(v) == tuple(v)
    for v in d.y_basis:
        assert not any(N.apply(v))
    assert d.fixed_rank + d.y_rank == theta.k
    B = Matrix.from_columns(d.Ltheta_basis)
    assert theta.A * B == B * d.restricted
    assert abs(d.restricted.det()) == 1


def test_decompose_examples():
    d = decompose(LatticeAutomorphism(CYCLE3))
    assert [tuple(v) for v in d.fixed_basis] == [(1, 1, 1)]
    assert d.y_rank == 2 and d.invariant_order == 3
    d = decompose(LatticeAutomorphism(ROT4))
    assert d.fixed_rank == 0 and d.y_rank == 2 and d.invariant_order == 2
    d = decompose(LatticeAutomorphism([[1, 0], [0, 1]]))
    assert d.fixed_rank == 2 and d.y_rank == 0 and d.invariant_order == 1
    assert decompose(LatticeAutomorphism(INVERSION)).invariant_order == 2
    assert decompose(LatticeAutomorphism(INVERSION2)).invariant_order == 4


def test_decompose_custom_L0():
    theta = LatticeAutomorphism(CYCLE3)
    d = decompose(theta, [[1, -1, 0]])
    assert len(d.Ltheta_basis) == 2
    with pytest.raises(ContractError):
        decompose(theta, [[1, 0, 0]])


def test_inversion_examples():
    theta = LatticeAutomorphism(INVERSION)
    assert theta_apply(theta, TorusPoint((5,))) == TorusPoint((Fraction(1, 5),))
    assert norm_map(theta, TorusPoint((7,))).is_identity()
    G = SemidirectGroup(theta)
    assert coset_element_order(G.element((5,), 1)) == 2
    R = MonomialRep(G, (1,))
    assert rep_matrix(R, G.element((3,), 0)) == Matrix.diag([3, Fraction(1, 3)])
    assert not commutant_check(R)


@pytest.mark.parametrize("A", [INVERSION, INVERSION2, ROT4, ROT3])
def test_coset_orders_divide_mn(A):
    theta = LatticeAutomorphism(A)
    G = SemidirectGroup(theta)
    mn = invariant_order(theta) * theta.n
    for x in points(theta.k, 7, 100):
        k = coset_element_order(G.element(x, 1))
        assert mn % k == 0


def test_coset_order_unsupported_for_infinite_invariants():
    G = SemidirectGroup(LatticeAutomorphism(CYCLE3))
    with pytest.raises(UnsupportedError):
        coset_element_order(G.element((2, 3, 5), 1))


def test_central_twist_inversion():
    theta = LatticeAutomorphism([[-1]])
    G = SemidirectGroup(theta, central=TorusPoint((-1,)))
    assert coset_element_order(G.element((7,), 1)) == 4
    assert coset_element_order(G.J()) == 4
    with pytest.raises(ContractError):
        SemidirectGroup(theta, central=TorusPoint((2,)))


@pytest.mark.parametrize("A", EXAMPLES)
def test_group_associativity(A):
    G = SemidirectGroup(LatticeAutomorphism(A))
    rng = random.Random(11)
    for _ in range(20):
        g, h, l = (G.element(random_torus_point(G.k, rng), rng.randrange(G.n)) for _ in range(3))
        assert (g * h) * l == g * (h * l)


@pytest.mark.parametrize("A, lam", [(ROT4, (1, 0)), (ROT3, (2, -1)), (CYCLE3, (1, 0, 0)), (INVERSION, (1,)), (INVERSION2, (1, 1))])
def test_rep_is_homomorphism(A, lam):
    G = SemidirectGroup(LatticeAutomorphism(A))
    R = MonomialRep(G, lam)
    rng = random.Random(5)
    for _ in range(100):
        g = G.element(random_torus_point(G.k, rng, height=4), rng.randrange(G.n))
        h = G.element(random_torus_point(G.k, rng, height=4), rng.randrange(G.n))
        assert rep_matrix(R, g * h) == rep_matrix(R, g) * rep_matrix(R, h)


def test_rep_homomorphism_with_central_twist_and_roots_of_unity():
    theta = LatticeAutomorphism([[-1]])
    G = SemidirectGroup(theta, central=TorusPoint((-1,)))
    R = MonomialRep(G, (1,))
    i = CyclotomicElement.zeta(4, 1)
    elems = [G.element(TorusPoint((c,)), a) for c in (2, i, 3 * i + 1, -1) for a in (0, 1)]
    for g in elems:
        for h in elems:
            assert rep_matrix(R, g * h) == rep_matrix(R, g) * rep_matrix(R, h)


@pytest.mark.parametrize("A, lam", [(ROT4, (1, 0)), (ROT3, (1, 1)), (CYCLE3, (0, 1, -1))])
def test_power_expansion_identity(A, lam):
    theta = LatticeAutomorphism(A)
    G = SemidirectGroup(theta)
    R = MonomialRep(G, lam)
    S = R.shift_matrix()
    for x in points(theta.k, 9, 10):
        for m in range(1, 2 * theta.n + 1):
            lhs = rep_matrix(R, G.element(x, 1)) ** m
            rhs = rep_matrix(R, G.element(twisted_product(theta, x, m), 0)) * S**m
            assert lhs == rhs


@pytest.mark.parametrize("A, lam", [(ROT4, (1, 0)), (ROT3, (1, 0)), (INVERSION, (3,)), (INVERSION2, (1, -2))])
def test_trace_identity_at_multiples_of_mn(A, lam):
    theta = LatticeAutomorphism(A)
    G = SemidirectGroup(theta)
    R = MonomialRep(G, lam)
    mn = invariant_order(theta) * theta.n
    report = trace_identity_check(R, mn, points(theta.k, 4, 30))
    assert report.all_passed


def test_commutant():
    G = SemidirectGroup(LatticeAutomorphism(CYCLE3))
    assert commutant_check(MonomialRep(G, (1, 1, 1)))
    assert not commutant_check(MonomialRep(G, (1, 0, 0)))


@given(st.lists(st.integers(-6, 6).filter(bool), min_size=2, max_size=2), st.integers(0, 8))
def test_torus_point_power_laws(coords, e):
    t = TorusPoint(tuple(coords))
    assert t ** e * t.inverse() ** e == TorusPoint.identity(2)
