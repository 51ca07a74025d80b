"""
Exact integer linear algebra.

Everything here works on Python ints, so entry growth during elimination is
never a correctness problem. The central routine is :func:`smith_normal_form`,
which also returns unimodular witnesses; kernels, ranks, cokernels and integer
solves are all read off from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense matrix of Python integers (row-major)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]], rows: int | None = None,
                 cols: int | None = None):
        body = tuple(tuple(int(x) for x in row) for row in data)
        if rows is None:
            rows = len(body)
        if cols is None:
            cols = len(body[0]) if body else 0
        if len(body) != rows or any(len(r) != cols for r in body):
            raise ValueError(f"ragged or mis-sized matrix data for shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = body

    # construction helpers
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        cols = len(columns)
        return cls([[columns[j][i] for j in range(cols)] for i in range(rows)], rows, cols)

    @classmethod
    def vstack(cls, blocks: Sequence["IntMatrix"], cols: int) -> "IntMatrix":
        data = [row for b in blocks for row in b._data]
        return cls(data, len(data), cols)

    @classmethod
    def hstack(cls, blocks: Sequence["IntMatrix"], rows: int) -> "IntMatrix":
        cols = sum(b.cols for b in blocks)
        data = [[x for b in blocks for x in b._data[i]] for i in range(rows)]
        return cls(data, rows, cols)

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix([self.column(j) for j in range(self.cols)], self.cols, self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data],
            self.rows, other.cols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._data)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self._data], self.rows, self.cols)

    def scaled(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * x for x in r] for r in self._data], self.rows, self.cols)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self._data[i][j] for j in col_idx] for i in row_idx],
                         len(row_idx), len(col_idx))

    def mod(self, p: int) -> "IntMatrix":
        return IntMatrix([[x % p for x in r] for r in self._data], self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self._data) for j, x in enumerate(r) if i != j)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, rows={self.rows}, cols={self.cols})"


def as_matrix(a) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix(a)


@dataclass(frozen=True)
class SnfResult:
    """``left @ A @ right`` is diagonal with entries ``diagonal``."""

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _pick_pivot(D, t, m, n):
    best = None
    for i in range(t, m):
        row = D[i]
        for j in range(t, n):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else (best[1], best[2])


def smith_normal_form(A) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivot: minimal absolute value in the active submatrix, ties broken by
    lowest row then lowest column, so output is reproducible.
    """
    A = as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    L = IntMatrix.identity(m).tolist()
    R = IntMatrix.identity(n).tolist()

    def add_row(dst, src, k):
        # row_dst += k * row_src
        if k:
            D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
            L[dst] = [a + k * b for a, b in zip(L[dst], L[src])]

    def add_col(dst, src, k):
        if k:
            for row in D:
                row[dst] += k * row[src]
            for row in R:
                row[dst] += k * row[src]

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in R:
                row[i], row[j] = row[j], row[i]

    diag = []
    for t in range(min(m, n)):
        pivot = _pick_pivot(D, t, m, n)
        if pivot is None:
            break
        while True:
            i, j = pivot
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if clean:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % p), None)
                if bad is None:
                    break
                add_row(t, bad[0], 1)
            pivot = _pick_pivot(D, t, m, n)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            L[t] = [-x for x in L[t]]
        diag.append(D[t][t])
    diag.extend([0] * (min(m, n) - len(diag)))
    return SnfResult(tuple(diag), IntMatrix(L, m, m), IntMatrix(R, n, n))


def rank(A) -> int:
    """Rank over Q by fraction-free elimination."""
    A = as_matrix(A)
    M = A.tolist()
    m, n = A.shape
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        for i in range(r + 1, m):
            if M[i][c]:
                a, b = pr[c], M[i][c]
                g = gcd(a, b)
                a, b = a // g, b // g
                M[i] = [a * x - b * y for x, y in zip(M[i], pr)]
        r += 1
        if r == m:
            break
    return r


def rank_mod_p(A, p: int) -> int:
    """Rank over the prime field F_p."""
    A = as_matrix(A)
    M = A.mod(p).tolist()
    m, n = A.shape
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                k = M[i][c]
                M[i] = [(x - k * y) % p for x, y in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def determinant(A) -> int:
    """Exact determinant via Bareiss elimination."""
    A = as_matrix(A)
    n = A.rows
    if A.cols != n:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = A.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def hermite_normal_form(A) -> IntMatrix:
    """Row-style HNF: a canonical basis of the row lattice of ``A``.

    Zero rows are dropped; pivots are positive and the entries above each
    pivot are reduced into ``[0, pivot)``.
    """
    A = as_matrix(A)
    M = A.tolist()
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if M[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(M[i][c]), i))
            M[r], M[piv] = M[piv], M[r]
            done = True
            for i in range(r + 1, m):
                if M[i][c]:
                    q = M[i][c] // M[r][c]
                    M[i] = [x - q * y for x, y in zip(M[i], M[r])]
                    done = done and M[i][c] == 0
            if done:
                break
        if r < m and M[r][c]:
            if M[r][c] < 0:
                M[r] = [-x for x in M[r]]
            for i in range(r):
                q = M[i][c] // M[r][c]
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[r])]
            r += 1
    return IntMatrix(M[:r], r, n)


def kernel_basis(A) -> IntMatrix:
    """Columns form a Z-basis of ``{x : A x = 0}``, in Hermite-reduced form."""
    A = as_matrix(A)
    n = A.cols
    snf = smith_normal_form(A)
    r = snf.rank
    cols = [snf.right.column(j) for j in range(r, n)]
    if not cols:
        return IntMatrix.zeros(n, 0)
    return hermite_normal_form(IntMatrix(cols, len(cols), n)).T


def cokernel_invariants(A) -> tuple[int, list[int]]:
    """Structure of ``Z^rows / A Z^cols`` as (free rank, torsion coefficients)."""
    A = as_matrix(A)
    snf = smith_normal_form(A)
    return A.rows - snf.rank, [d for d in snf.diagonal if d > 1]


def solve_integer(A, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some integer ``x`` with ``A x = b``, or ``None`` if there is none."""
    A = as_matrix(A)
    if len(b) != A.rows:
        raise ValueError("right-hand side has wrong length")
    snf = smith_normal_form(A)
    y = snf.left.apply(b)
    z = [0] * A.cols
    for i, yi in enumerate(y):
        d = snf.diagonal[i] if i < len(snf.diagonal) else 0
        if d == 0:
            if yi:
                return None
        else:
            if yi % d:
                return None
            z[i] = yi // d
    return snf.right.apply(z)


def solve_integer_matrix(A, B) -> IntMatrix | None:
    """Integer ``X`` with ``A X = B`` column by column, or ``None``."""
    A, B = as_matrix(A), as_matrix(B)
    cols = []
    for j in range(B.cols):
        x = solve_integer(A, B.column(j))
        if x is None:
            return None
        cols.append(x)
    return IntMatrix.from_columns(cols, A.cols)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def is_unimodular(A) -> bool:
    A = as_matrix(A)
    return A.rows == A.cols and abs(determinant(A)) == 1
