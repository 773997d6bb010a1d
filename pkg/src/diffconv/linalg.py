"""Dense exact linear algebra over F_p(z).

Elimination is plain fraction-based Gauss-Jordan.  The pivot is always the
first nonzero entry in scan order, so echelon forms are deterministic (and,
being reduced, unique anyway).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .rfield import Derivation, RatFun, const, format_ratfun, parse_ratfun

__all__ = [
    "FunMatrix",
    "InconsistentSystem",
    "identity",
    "zeros",
    "diag",
    "wronskian",
    "rref",
    "rref_with_pivots",
    "rcef",
    "rank",
    "solve_left",
    "left_kernel",
    "mat_mul",
    "vec_mat",
    "transpose",
    "submatrix",
    "hstack",
    "vstack",
    "is_invertible",
    "format_matrix",
    "parse_matrix",
]


class InconsistentSystem(ArithmeticError):
    pass


class FunMatrix:
    """Immutable rows x cols matrix of RatFun entries."""

    __slots__ = ("rows", "cols", "p", "_data")

    def __init__(self, data: Iterable[Sequence[RatFun]], p: int, cols: int | None = None):
        rows = tuple(tuple(r) for r in data)
        if cols is None:
            if not rows:
                raise ValueError("cannot infer the column count of an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
            for e in r:
                if not isinstance(e, RatFun) or e.p != p:
                    raise ValueError(f"matrix entry {e!r} is not in F_{p}(z)")
        self._data = rows
        self.rows = len(rows)
        self.cols = cols
        self.p = p

    @classmethod
    def _raw(cls, rows: list, p: int, cols: int) -> FunMatrix:
        obj = cls.__new__(cls)
        obj._data = tuple(tuple(r) for r in rows)
        obj.rows = len(obj._data)
        obj.cols = cols
        obj.p = p
        return obj

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[RatFun, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[RatFun, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[RatFun]]:
        return [list(r) for r in self._data]

    def is_zero(self) -> bool:
        return not any(e for r in self._data for e in r)

    @property
    def T(self) -> FunMatrix:
        return transpose(self)

    def __matmul__(self, other: FunMatrix) -> FunMatrix:
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, FunMatrix):
            return self.shape == other.shape and self._data == other._data
        return NotImplemented

    def __hash__(self):
        return hash(self._data)

    def __repr__(self) -> str:
        return f"FunMatrix({self.rows}x{self.cols})\n" + format_matrix(self)


def identity(n: int, p: int) -> FunMatrix:
    one, zero = const(1, p), const(0, p)
    return FunMatrix._raw([[one if i == j else zero for j in range(n)] for i in range(n)], p, n)


def zeros(rows: int, cols: int, p: int) -> FunMatrix:
    zero = const(0, p)
    return FunMatrix._raw([[zero] * cols for _ in range(rows)], p, cols)


def diag(entries: Sequence[RatFun], p: int) -> FunMatrix:
    zero = const(0, p)
    n = len(entries)
    return FunMatrix._raw([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], p, n)


def wronskian(elements: Sequence[RatFun], k: int, D: Derivation) -> FunMatrix:
    """k x n matrix whose (i, j) entry is delta^i(c_j)."""
    if not elements:
        raise ValueError("Wronskian of an empty family")
    if k < 1:
        raise ValueError("Wronskian order must be >= 1")
    columns = [D.orbit(c, k) for c in elements]
    return FunMatrix._raw([[col[i] for col in columns] for i in range(k)], D.p, len(elements))


def transpose(M: FunMatrix) -> FunMatrix:
    return FunMatrix._raw([[r[j] for r in M._data] for j in range(M.cols)], M.p, M.rows)


def mat_mul(A: FunMatrix, B: FunMatrix) -> FunMatrix:
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    p = A.p
    zero = const(0, p)
    bt = transpose(B)._data
    out = []
    for row in A._data:
        new = []
        for col in bt:
            acc = zero
            for a, b in zip(row, col):
                if a and b:
                    acc = acc + a * b
            new.append(acc)
        out.append(new)
    return FunMatrix._raw(out, p, B.cols)


def vec_mat(v: Sequence[RatFun], M: FunMatrix) -> list[RatFun]:
    """Row vector times matrix."""
    if len(v) != M.rows:
        raise ValueError(f"vector of length {len(v)} against {M.rows} matrix rows")
    zero = const(0, M.p)
    out = []
    for j in range(M.cols):
        acc = zero
        for i, a in enumerate(v):
            b = M._data[i][j]
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def submatrix(M: FunMatrix, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> FunMatrix:
    rows = range(M.rows) if rows is None else rows
    cols = range(M.cols) if cols is None else list(cols)
    return FunMatrix._raw([[M._data[i][j] for j in cols] for i in rows], M.p, len(cols))


def hstack(*ms: FunMatrix) -> FunMatrix:
    n = ms[0].rows
    if any(m.rows != n for m in ms):
        raise ValueError("hstack needs equal row counts")
    return FunMatrix._raw([sum((list(m._data[i]) for m in ms), []) for i in range(n)],
                          ms[0].p, sum(m.cols for m in ms))


def vstack(*ms: FunMatrix) -> FunMatrix:
    c = ms[0].cols
    if any(m.cols != c for m in ms):
        raise ValueError("vstack needs equal column counts")
    return FunMatrix._raw([r for m in ms for r in m._data], ms[0].p, c)


def rref_with_pivots(M: FunMatrix) -> tuple[FunMatrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = [list(r) for r in M._data]
    nrows, ncols = M.rows, M.cols
    pivots = []
    pr = 0
    for c in range(ncols):
        if pr == nrows:
            break
        src = next((i for i in range(pr, nrows) if a[i][c]), None)
        if src is None:
            continue
        a[pr], a[src] = a[src], a[pr]
        inv = a[pr][c].inverse()
        a[pr] = [e * inv if e else e for e in a[pr]]
        prow = a[pr]
        for i in range(nrows):
            if i != pr and a[i][c]:
                f = a[i][c]
                a[i] = [e - f * q if q else e for e, q in zip(a[i], prow)]
        pivots.append(c)
        pr += 1
    return FunMatrix._raw(a, M.p, ncols), pivots


def rref(M: FunMatrix) -> FunMatrix:
    return rref_with_pivots(M)[0]


def rcef(M: FunMatrix) -> FunMatrix:
    """Reduced column echelon form, as transpose(rref(transpose(M)))."""
    return transpose(rref(transpose(M)))


def rank(M: FunMatrix) -> int:
    return len(rref_with_pivots(M)[1])


def is_invertible(M: FunMatrix) -> bool:
    return M.rows == M.cols and rank(M) == M.rows


def solve_left(A: FunMatrix, b: Sequence[RatFun]) -> list[RatFun]:
    """One solution x of x*A = b; free variables are set to zero."""
    if len(b) != A.cols:
        raise ValueError(f"right-hand side has length {len(b)}, expected {A.cols}")
    # x A = b  <=>  A^T x^T = b^T
    at = transpose(A)
    aug = FunMatrix._raw([list(r) + [bi] for r, bi in zip(at._data, b)], A.p, A.rows + 1)
    R, pivots = rref_with_pivots(aug)
    if pivots and pivots[-1] == A.rows:
        raise InconsistentSystem("x*A = b has no solution")
    x = [const(0, A.p)] * A.rows
    for i, c in enumerate(pivots):
        x[c] = R[i, A.rows]
    return x


def left_kernel(M: FunMatrix) -> FunMatrix:
    """Rows form a basis of {x : x*M = 0}."""
    p = M.p
    R, pivots = rref_with_pivots(transpose(M))
    free = [j for j in range(M.rows) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [const(0, p)] * M.rows
        v[f] = const(1, p)
        for i, c in enumerate(pivots):
            v[c] = -R[i, f]
        basis.append(v)
    return FunMatrix._raw(basis, p, M.rows)


def format_matrix(M: FunMatrix) -> str:
    return "\n".join("; ".join(format_ratfun(e) for e in r) for r in M._data)


def parse_matrix(text: str, p: int, strict: bool | None = None) -> FunMatrix:
    rows = [line for line in text.splitlines() if line.strip()]
    data = [[parse_ratfun(cell, p, strict=strict) for cell in line.split(";")] for line in rows]
    return FunMatrix(data, p)
