"""Exact arithmetic: rationals, polynomials, matrices, cyclotomic fields, lattices."""

from fractions import Fraction as BigRational

from .arith import ContractError, DimensionError, divisors, lcm, rat, totient
from .cyclotomic import CyclotomicElement, expand_roots, rational_poly_from_roots
from .lattice import (
    hermite_basis,
    integer_kernel,
    is_unimodular,
    matrix_order,
    smith_normal_form,
)
from .matrix import IntMatrix, Matrix, QMatrix, charpoly, companion_matrix, rational_kernel
from .poly import RatPoly, cyclotomic_polynomial, power_sum, power_sums
from .powers import is_root_of_unity, power_charpoly

__all__ = [
    "BigRational",
    "ContractError",
    "CyclotomicElement",
    "DimensionError",
    "IntMatrix",
    "Matrix",
    "QMatrix",
    "RatPoly",
    "charpoly",
    "companion_matrix",
    "cyclotomic_polynomial",
    "divisors",
    "expand_roots",
    "hermite_basis",
    "integer_kernel",
    "is_root_of_unity",
    "is_unimodular",
    "lcm",
    "matrix_order",
    "power_charpoly",
    "power_sum",
    "power_sums",
    "rat",
    "rational_kernel",
    "rational_poly_from_roots",
    "smith_normal_form",
    "totient",
]
