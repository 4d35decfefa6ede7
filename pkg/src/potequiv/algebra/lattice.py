"""Integer-lattice normal forms: Smith and Hermite, kernels, matrix order."""

from __future__ import annotations

import math

from .arith import ContractError, DimensionError
from .matrix import IntMatrix, Matrix

DEFAULT_ORDER_CAP = 1000


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A: Matrix, check: bool = False):
    """Return (U, D, V) with U, V unimodular and D = U*A*V in Smith form.

    Diagonal entries are non-negative and each divides the next.
    With ``check=True`` the identity and unimodularity are re-verified
    by exact multiplication.
    """
    A0 = IntMatrix(A.rows)
    m, n = A0.shape
    D = [list(r) for r in A0.rows]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for r in D:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty |= D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty |= D[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]

    Um, Dm, Vm = Matrix(U), Matrix(D), Matrix(V)
    if check:
        assert Um * A0 * Vm == Dm, "SNF identity U*A*V = D failed"
        assert abs(Um.det()) == 1 and abs(Vm.det()) == 1, "SNF transforms not unimodular"
        diag = [Dm[i, i] for i in range(min(m, n))]
        assert all(Dm[i, j] == 0 for i in range(m) for j in range(n) if i != j)
        assert all(b % a == 0 if a else b == 0 for a, b in zip(diag, diag[1:]))
    return Um, Dm, Vm


def smith_invariants(A: Matrix) -> list[int]:
    _, D, _ = smith_normal_form(A)
    return [D[i, i] for i in range(min(D.shape))]


def hermite_basis(vectors) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form basis of the Z-span of integer vectors.

    Output rows are in echelon form with positive pivots and entries above
    each pivot reduced into [0, pivot). Zero rows are dropped, so the result
    is a canonical basis: two families span the same lattice iff their
    Hermite bases are equal.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionError("vectors of unequal length")
    out = []
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    done &= rows[i][c] == 0
            if done:
                break
        if r < len(rows) and rows[r][c] != 0:
            if rows[r][c] < 0:
                rows[r] = [-a for a in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
            r += 1
            if r == len(rows):
                break
    out = [tuple(row) for row in rows[:r] if any(row)]
    return out


def integer_kernel(A: Matrix) -> list[tuple[int, ...]]:
    """Saturated Z-basis of {v in Z^n : A v = 0}, from the columns of V in A's SNF."""
    _, D, V = smith_normal_form(A)
    m, n = D.shape
    rank = sum(1 for i in range(min(m, n)) if D[i, i] != 0)
    return [V.col(j) for j in range(rank, n)]


def saturate(vectors) -> list[tuple[int, ...]]:
    """Z-basis of (Q-span of vectors) intersected with Z^n."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    M = Matrix(vectors)
    # vectors orthogonal to the span, then the kernel of those
    perp = integer_kernel(M)
    n = len(vectors[0])
    if not perp:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return integer_kernel(Matrix(perp))


def clear_denominators(v) -> tuple[int, ...]:
    """Smallest primitive integer multiple of a rational vector."""
    from fractions import Fraction

    fr = [Fraction(a) for a in v]
    scale = math.lcm(*(a.denominator for a in fr)) if fr else 1
    ints = [int(a * scale) for a in fr]
    g = math.gcd(*ints) if any(ints) else 1
    return tuple(a // g for a in ints)


def is_unimodular(A: Matrix) -> bool:
    return A.is_square() and A.is_integral() and abs(A.det()) == 1


def matrix_order(A: Matrix, cap: int = DEFAULT_ORDER_CAP) -> int | None:
    """Least n >= 1 with A^n = I, or None if no such n <= cap."""
    if not A.is_square():
        raise DimensionError("matrix order of a non-square matrix")
    if not is_unimodular(A):
        raise ContractError("matrix_order needs a unimodular integer matrix")
    ident = Matrix.identity(A.nrows)
    P = A
    for n in range(1, cap + 1):
        if P == ident:
            return n
        P = P * A
    return None
