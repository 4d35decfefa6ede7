"""Exact dense matrices.

One ``Matrix`` class covers integer, rational and cyclotomic entries; rational
entries are normalized with :func:`rat` so integer matrices stay ``int``.
``IntMatrix`` and ``QMatrix`` are validating constructors, not subclasses.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import ContractError, DimensionError, is_rational, rat
from .poly import RatPoly


def _norm(x):
    t = type(x)
    if t is int:
        return x
    if t is Fraction:
        return x.numerator if x.denominator == 1 else x
    return rat(x) if is_rational(x) else x


class Matrix:
    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(_norm(a) for a in r) for r in rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged matrix rows")
        self.rows = rows
        self._hash = None

    @classmethod
    def identity(cls, n: int, one=1) -> Matrix:
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> Matrix:
        return cls([[0] * (ncols or nrows) for _ in range(nrows)])

    @classmethod
    def diag(cls, entries) -> Matrix:
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols) -> Matrix:
        return cls(list(zip(*cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> Matrix:
        return Matrix(list(zip(*self.rows)))

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for r in self.rows for a in r)

    def map(self, fn) -> Matrix:
        return Matrix([[fn(a) for a in r] for r in self.rows])

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = 0
                    for a, b in zip(r, c):
                        if a != 0 and b != 0:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(out)
        return Matrix([[a * other for a in r] for r in self.rows])

    __matmul__ = __mul__

    def __rmul__(self, other):
        return Matrix([[other * a for a in r] for r in self.rows])

    def apply(self, vec) -> tuple:
        """Matrix times column vector."""
        vec = tuple(vec)
        if len(vec) != self.ncols:
            raise DimensionError(f"vector of length {len(vec)} for {self.shape} matrix")
        return tuple(_norm(sum((a * b for a, b in zip(r, vec)), 0)) for r in self.rows)

    def __pow__(self, e: int) -> Matrix:
        if not self.is_square():
            raise DimensionError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        one = self._one()
        result, base = Matrix.identity(self.nrows, one), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _one(self):
        for r in self.rows:
            for a in r:
                if not is_rational(a):
                    return a**0
        return 1

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def trace(self):
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        return _norm(sum((self.rows[i][i] for i in range(self.nrows)), 0))

    def det(self):
        """Determinant by fraction-free Bareiss elimination (exact for ints)."""
        if not self.is_square():
            raise DimensionError("determinant of a non-square matrix")
        n = self.nrows
        M = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if M[k][k] == 0:
                for i in range(k + 1, n):
                    if M[i][k] != 0:
                        M[k], M[i] = M[i], M[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                    M[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            prev = M[k][k]
        return _norm(sign * M[n - 1][n - 1])

    def inverse(self) -> Matrix:
        """Gauss-Jordan inverse over the entries' fraction field."""
        if not self.is_square():
            raise DimensionError("inverse of a non-square matrix")
        n = self.nrows
        one = self._one()
        M = [[_lift(a) for a in r] + [one if i == j else 0 * one for j in range(n)]
             for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((i for i in range(c, n) if M[i][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            M[c], M[piv] = M[piv], M[c]
            inv = 1 / M[c][c] if is_rational(M[c][c]) else M[c][c] ** -1
            M[c] = [a * inv for a in M[c]]
            for i in range(n):
                if i != c and M[i][c] != 0:
                    f = M[i][c]
                    M[i] = [a - f * b for a, b in zip(M[i], M[c])]
        return Matrix([r[n:] for r in M])

    def rank(self) -> int:
        return len(rref(self)[1])

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "]"


def _lift(a):
    return Fraction(a) if isinstance(a, int) else a


def IntMatrix(rows) -> Matrix:
    M = Matrix(rows)
    if not M.is_integral():
        raise ContractError("integer matrix expected")
    return M


def QMatrix(rows) -> Matrix:
    M = Matrix(rows)
    if not all(is_rational(a) for r in M.rows for a in r):
        raise ContractError("rational matrix expected")
    return M


def rref(M: Matrix):
    """Reduced row echelon form over Q. Returns (rows, pivot_columns)."""
    A = [[Fraction(a) for a in r] for r in M.rows]
    nr, nc = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [a / p for a in A[r]]
        for i in range(nr):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return [[rat(a) for a in row] for row in A], pivots


def rational_kernel(M: Matrix) -> list[tuple]:
    """Basis of {v in Q^n : M v = 0}, one vector per free column."""
    R, pivots = rref(M)
    nc = M.ncols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * nc
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = rat(-R[i][f])
        basis.append(tuple(v))
    return basis


def charpoly(M: Matrix) -> RatPoly:
    """det(xI - M) by the Faddeev-LeVerrier recursion, exact over Q."""
    if not M.is_square():
        raise DimensionError(f"characteristic polynomial of a {M.shape} matrix")
    n = M.nrows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = Matrix.identity(n)
    Mk = Matrix.zeros(n)
    for k in range(1, n + 1):
        Mk = M * Mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = Fraction((M * Mk).trace()) / -k
    return RatPoly(coeffs)


def companion_matrix(f: RatPoly) -> Matrix:
    """Companion matrix of monic f acting on the basis 1, y, ..., y^(n-1)."""
    if not f.is_monic():
        raise ContractError("companion matrix needs a monic polynomial")
    n = f.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -f.coeffs[i]
    return Matrix(rows)
