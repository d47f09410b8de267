"""Dense exact linear algebra over K.

Matrices are plain objects wrapping a list of row lists of FieldElement.
Rank uses Bareiss fraction-free elimination (pivoting only needs a nonzero
test, which is exact here).  Kernel and solve go through reduced row
echelon form with normalised pivots; tests cross-check the two routes.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .scalar import ONE, ZERO, fe

__all__ = [
    "Matrix", "DimensionMismatch", "rank", "kernel_basis", "solve", "kron",
    "rref", "inverse", "row_space_basis", "vec_rank", "MAX_DIM",
]

MAX_DIM = 256


class DimensionMismatch(ValueError):
    pass


class Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        self.data = [[fe(x) for x in row] for row in data]
        self.rows = len(self.data)
        if cols is None:
            cols = len(self.data[0]) if self.data else 0
        self.cols = cols
        for row in self.data:
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix")

    @classmethod
    def _wrap(cls, data, rows, cols):
        m = object.__new__(cls)
        m.data = data
        m.rows = rows
        m.cols = cols
        return m

    @classmethod
    def zeros(cls, r, c):
        return cls._wrap([[ZERO] * c for _ in range(r)], r, c)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def diag(cls, entries):
        entries = [fe(e) for e in entries]
        m = cls.zeros(len(entries), len(entries))
        for i, e in enumerate(entries):
            m.data[i][i] = e
        return m

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None):
        if not cols:
            return cls.zeros(nrows or 0, 0)
        n = len(cols[0])
        return cls._wrap([[fe(cols[j][i]) for j in range(len(cols))] for i in range(n)], n, len(cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.data[i][j] = fe(v)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def copy(self):
        return Matrix._wrap([row[:] for row in self.data], self.rows, self.cols)

    def column(self, j):
        return [row[j] for row in self.data]

    def transpose(self):
        return Matrix._wrap([list(col) for col in zip(*self.data)] if self.rows else [],
                            self.cols, self.rows)

    T = property(transpose)

    def __eq__(self, o):
        if not isinstance(o, Matrix):
            return NotImplemented
        return self.shape == o.shape and self.data == o.data

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def __add__(self, o):
        if self.shape != o.shape:
            raise DimensionMismatch(f"{self.shape} + {o.shape}")
        return Matrix._wrap([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, o.data)],
                            self.rows, self.cols)

    def __sub__(self, o):
        if self.shape != o.shape:
            raise DimensionMismatch(f"{self.shape} - {o.shape}")
        return Matrix._wrap([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, o.data)],
                            self.rows, self.cols)

    def __neg__(self):
        return Matrix._wrap([[-a for a in r] for r in self.data], self.rows, self.cols)

    def scale(self, s):
        s = fe(s)
        return Matrix._wrap([[s * a for a in r] for r in self.data], self.rows, self.cols)

    def __matmul__(self, o):
        if isinstance(o, Matrix):
            if self.cols != o.rows:
                raise DimensionMismatch(f"{self.shape} @ {o.shape}")
            odata = o.data
            out = []
            for r in self.data:
                acc = [ZERO] * o.cols
                for k, a in enumerate(r):
                    if not a:
                        continue
                    orow = odata[k]
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] = acc[j] + a * b
                out.append(acc)
            return Matrix._wrap(out, self.rows, o.cols)
        # vector
        v = list(o)
        if len(v) != self.cols:
            raise DimensionMismatch("matrix-vector length")
        out = []
        for r in self.data:
            s = ZERO
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def apply(self, v):
        return self @ v

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def to_strings(self):
        return [[x.to_literal() for x in r] for r in self.data]


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; row index (i1, i2) -> i1 * B.rows + i2."""
    rows = []
    for ra in A.data:
        for rb in B.data:
            row = []
            for a in ra:
                if a:
                    row.extend(a * b if b else ZERO for b in rb)
                else:
                    row.extend([ZERO] * B.cols)
            rows.append(row)
    return Matrix._wrap(rows, A.rows * B.rows, A.cols * B.cols)


def _as_rows(m) -> list:
    if isinstance(m, Matrix):
        return [row[:] for row in m.data]
    return [[fe(x) for x in row] for row in m]


def bareiss_rank(m) -> int:
    """Rank by Bareiss fraction-free elimination."""
    M = _as_rows(m)
    n = len(M)
    if n == 0:
        return 0
    ncols = len(M[0])
    prev = ONE
    r = 0
    for col in range(ncols):
        if r == n:
            break
        p = r
        while p < n and not M[p][col]:
            p += 1
        if p == n:
            continue
        if p != r:
            M[p], M[r] = M[r], M[p]
        piv = M[r][col]
        prow = M[r]
        inv_prev = prev.inverse() if prev != ONE else None
        for i in range(r + 1, n):
            row = M[i]
            a = row[col]
            if a:
                for j in range(col + 1, ncols):
                    x = row[j]
                    y = prow[j]
                    v = piv * x if x else ZERO
                    if y:
                        v = v - a * y
                    if inv_prev is not None and v:
                        v = v * inv_prev
                    row[j] = v
            else:
                for j in range(col + 1, ncols):
                    x = row[j]
                    if x:
                        v = piv * x
                        row[j] = v * inv_prev if inv_prev is not None else v
            row[col] = ZERO
        prev = piv
        r += 1
    return r


def rref(m):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    M = _as_rows(m)
    n = len(M)
    if n == 0:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if r == n:
            break
        p = r
        while p < n and not M[p][col]:
            p += 1
        if p == n:
            continue
        if p != r:
            M[p], M[r] = M[r], M[p]
        prow = M[r]
        inv = prow[col].inverse()
        if inv != ONE:
            prow = M[r] = [x * inv if x else ZERO for x in prow]
        nz = [j for j in range(col, ncols) if prow[j]]
        for i in range(n):
            if i == r:
                continue
            row = M[i]
            a = row[col]
            if a:
                for j in nz:
                    row[j] = row[j] - a * prow[j]
        pivots.append(col)
        r += 1
    return M[:r], pivots


def rank(m, method: str = "bareiss") -> int:
    if method == "bareiss":
        return bareiss_rank(m)
    if method == "gauss":
        return len(rref(m)[1])
    raise ValueError(method)


def kernel_basis(m, ncols: int | None = None) -> list:
    """Basis of {v : m v = 0} as a list of column vectors (lists)."""
    rows = _as_rows(m)
    if ncols is None:
        ncols = m.cols if isinstance(m, Matrix) else (len(rows[0]) if rows else 0)
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(rows)
    pivset = set(piv)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, pc in enumerate(piv):
            x = R[i][f]
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def solve(A, b):
    """One solution x of A x = b, or None when the system is inconsistent."""
    rows = _as_rows(A)
    b = [fe(x) for x in b]
    if len(rows) != len(b):
        raise DimensionMismatch("rhs length")
    ncols = A.cols if isinstance(A, Matrix) else len(rows[0])
    aug = [r + [bi] for r, bi in zip(rows, b)]
    R, piv = rref(aug)
    if piv and piv[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for i, pc in enumerate(piv):
        x[pc] = R[i][ncols]
    return x


def inverse(A: Matrix) -> Matrix:
    n = A.rows
    if A.cols != n:
        raise DimensionMismatch("inverse of non-square matrix")
    aug = [row[:] + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A.data)]
    R, piv = rref(aug)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("singular matrix")
    return Matrix._wrap([r[n:] for r in R], n, n)


def row_space_basis(vectors: Iterable[Sequence]) -> list:
    vs = [[fe(x) for x in v] for v in vectors]
    if not vs:
        return []
    R, _ = rref(vs)
    return R


def vec_rank(vectors: Iterable[Sequence]) -> int:
    vs = [list(v) for v in vectors]
    if not vs:
        return 0
    return bareiss_rank(vs)
