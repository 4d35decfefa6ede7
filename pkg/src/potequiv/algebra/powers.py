"""Characteristic polynomials of powers, and root-of-unity recognition."""

from __future__ import annotations

from functools import lru_cache

from .arith import ContractError, totient
from .matrix import Matrix, charpoly
from .poly import RatPoly, cyclotomic_polynomial


@lru_cache(maxsize=8192)
def power_charpoly(f: RatPoly, m: int) -> RatPoly:
    """Monic polynomial whose roots are the m-th powers of the roots of f.

    This is the resultant Res_y(f(y), x - y^m). For monic f it equals the
    norm of x - y^m from Q[y]/(f) down to Q[x], i.e. the characteristic
    polynomial of multiplication by (y^m mod f) on that algebra.
    """
    if not isinstance(f, RatPoly) or not f.is_monic():
        raise ContractError("power_charpoly needs a monic polynomial")
    if m < 1:
        raise ContractError(f"power_charpoly needs m >= 1, got {m}")
    if m == 1:
        return f
    n = f.degree
    r = RatPoly.x().powmod(m, f)
    cols = []
    basis_image = r
    for j in range(n):
        cols.append([basis_image[i] for i in range(n)])
        if j + 1 < n:
            basis_image = (basis_image * RatPoly.x()) % f
    return charpoly(Matrix.from_columns(cols))


def is_root_of_unity(f: RatPoly) -> int | None:
    """Order k when the irreducible monic f equals Phi_k, else None.

    Only k with phi(k) = deg f can occur, and phi(k) >= sqrt(k/2)
    bounds that set.
    """
    if not f.is_monic() or not f.is_integral():
        raise ContractError("is_root_of_unity needs a monic integer polynomial")
    d = f.degree
    if d < 1:
        raise ContractError("constant polynomial has no roots")
    for k in range(1, 2 * d * d + 1):
        if totient(k) == d and cyclotomic_polynomial(k) == f:
            return k
    return None
