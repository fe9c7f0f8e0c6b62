"""Exact dense linear algebra over the scalar rings.

Matrices are immutable row-major arrays tagged with a ring (integers,
rationals, q-polynomials or q-rational functions).  Determinants come from a
fraction-free Bareiss elimination (the workhorse), Dodgson condensation (with
a Bareiss fallback on interior zeros, since exact arithmetic forbids
perturbation tricks), and naive cofactor expansion (the cross-check oracle).
Inverses are computed over the ring's fraction field and verified against the
identity before being returned.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from catdet.qseries import ONE as QP_ONE
from catdet.qseries import ZERO as QP_ZERO
from catdet.qseries import QPoly, QRat

__all__ = [
    "Ring",
    "INT",
    "FRAC",
    "QPOLY",
    "QRAT",
    "Matrix",
    "det_bareiss",
    "det_condensation",
    "det_cofactor",
    "inverse",
    "nullspace_vector_check",
    "matvec",
    "rank",
]


class Ring:
    """A scalar ring: constants, coercion, exact division, fraction field."""

    def __init__(self, name, zero, one, coerce, exact_div, field_of=None):
        self.name = name
        self.zero = zero
        self.one = one
        self.coerce = coerce
        self.exact_div = exact_div
        self._field_of = field_of

    @property
    def field(self) -> "Ring":
        return self._field_of if self._field_of is not None else self

    def is_zero(self, v) -> bool:
        return v == self.zero

    def __repr__(self):
        return f"Ring({self.name})"


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact integer division {a} / {b}")
    return q


FRAC = Ring("rational", Fraction(0), Fraction(1), Fraction, lambda a, b: a / b)
INT = Ring("integer", 0, 1, int, _int_exact_div, field_of=FRAC)


def _qrat_coerce(v):
    if isinstance(v, QRat):
        return v
    return QRat(v)


QRAT = Ring("q-rational", QRat(0), QRat(1), _qrat_coerce, lambda a, b: a / b)


def _qpoly_coerce(v):
    if isinstance(v, QPoly):
        return v
    if isinstance(v, int):
        return QPoly.const(v)
    if isinstance(v, QRat):
        return v.as_poly()
    raise TypeError(f"cannot coerce {v!r} to QPoly")


QPOLY = Ring(
    "q-polynomial",
    QP_ZERO,
    QP_ONE,
    _qpoly_coerce,
    lambda a, b: a.exact_div(b),
    field_of=QRAT,
)

_FIELD_VALUE = {
    "integer": Fraction,
    "rational": Fraction,
    "q-polynomial": lambda v: QRat(v),
    "q-rational": lambda v: v,
}


def infer_ring(values) -> Ring:
    """Pick the smallest ring containing all the given values."""
    ring = INT
    for v in values:
        if isinstance(v, QRat):
            return QRAT
        if isinstance(v, QPoly):
            ring = QPOLY
        elif isinstance(v, Fraction) and ring is INT:
            ring = FRAC
        elif isinstance(v, int):
            pass
        else:
            raise TypeError(f"unsupported matrix entry {v!r}")
    return ring


class Matrix:
    """Immutable dense matrix over one of the exact rings."""

    __slots__ = ("nrows", "ncols", "data", "ring")

    def __init__(self, nrows: int, ncols: int, data: Sequence, ring: Ring | None = None):
        if len(data) != nrows * ncols:
            raise ValueError("entry count does not match dimensions")
        if ring is None:
            ring = infer_ring(data)
        self.nrows = nrows
        self.ncols = ncols
        self.ring = ring
        self.data = tuple(ring.coerce(v) for v in data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: Ring | None = None) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = [v for row in rows for v in row]
        return cls(nrows, ncols, flat, ring)

    @classmethod
    def build(cls, nrows: int, ncols: int, entry: Callable[[int, int], object],
              ring: Ring | None = None) -> "Matrix":
        flat = [entry(i, j) for i in range(nrows) for j in range(ncols)]
        return cls(nrows, ncols, flat, ring)

    @classmethod
    def identity(cls, n: int, ring: Ring = INT) -> "Matrix":
        return cls.build(n, n, lambda i, j: ring.one if i == j else ring.zero, ring)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.ncols + j]

    def rows(self):
        n = self.ncols
        return [list(self.data[i * n:(i + 1) * n]) for i in range(self.nrows)]

    def transpose(self) -> "Matrix":
        return Matrix.build(self.ncols, self.nrows, lambda i, j: self[j, i], self.ring)

    def to_field(self) -> "Matrix":
        if self.ring.field is self.ring:
            return self
        lift = _FIELD_VALUE[self.ring.name]
        return Matrix(self.nrows, self.ncols, [lift(v) for v in self.data], self.ring.field)

    def map(self, fn, ring: Ring | None = None) -> "Matrix":
        return Matrix(self.nrows, self.ncols, [fn(v) for v in self.data], ring)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.nrows):
            for j in range(other.ncols):
                acc = self.ring.zero
                for k in range(self.ncols):
                    acc = acc + self[i, k] * other[k, j]
                out.append(acc)
        return Matrix(self.nrows, other.ncols, out, self.ring)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(a == b for a, b in zip(self.data, other.data))
        )

    def __repr__(self):
        body = "; ".join(
            " ".join(str(self[i, j]) for j in range(self.ncols)) for i in range(self.nrows)
        )
        return f"Matrix[{self.nrows}x{self.ncols} over {self.ring.name}]({body})"


def _square(m: Matrix) -> int:
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    return m.nrows


def det_bareiss(m: Matrix):
    """Fraction-free determinant; all intermediate divisions are exact.

    Rows are swapped (with sign tracking) when a pivot vanishes; if no
    nonzero pivot exists in a column the determinant is zero.  The 0x0
    matrix has determinant 1.
    """
    n = _square(m)
    ring = m.ring
    if n == 0:
        return ring.one
    a = [list(m.data[i * n:(i + 1) * n]) for i in range(n)]
    is_zero = ring.is_zero
    div = ring.exact_div
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            head = row_i[k]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = div(row_i[j] * pivot - head * row_k[j], prev)
            row_i[k] = ring.zero
        prev = pivot
    value = a[n - 1][n - 1]
    return value if sign == 1 else -value


def det_cofactor(m: Matrix):
    """Naive cofactor expansion (exponential; used as an independent oracle)."""
    n = _square(m)
    ring = m.ring
    if n == 0:
        return ring.one
    data = m.data

    def expand(rows: tuple[int, ...], col: int):
        if len(rows) == 1:
            return data[rows[0] * n + col]
        acc = ring.zero
        sign = 1
        for idx, r in enumerate(rows):
            v = data[r * n + col]
            if not ring.is_zero(v):
                rest = rows[:idx] + rows[idx + 1:]
                term = v * expand(rest, col + 1)
                acc = acc + term if sign == 1 else acc - term
            sign = -sign
        return acc

    return expand(tuple(range(n)), 0)


def det_condensation(m: Matrix):
    """Dodgson condensation; falls back to Bareiss on interior zeros."""
    n = _square(m)
    ring = m.ring
    if n == 0:
        return ring.one
    if n == 1:
        return m.data[0]
    prev = [[ring.one] * (n + 1) for _ in range(n + 1)]
    cur = m.rows()
    size = n
    while size > 1:
        nxt = []
        for i in range(size - 1):
            row = []
            for j in range(size - 1):
                num = cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                interior = prev[i + 1][j + 1]
                if ring.is_zero(interior):
                    return det_bareiss(m)
                row.append(ring.exact_div(num, interior))
            nxt.append(row)
        prev, cur = cur, nxt
        size -= 1
    return cur[0][0]


def matvec(m: Matrix, v: Sequence):
    """Exact matrix-vector product."""
    if m.ncols != len(v):
        raise ValueError("dimension mismatch")
    ring = m.ring
    vec = [ring.coerce(x) for x in v]
    out = []
    for i in range(m.nrows):
        acc = ring.zero
        for j in range(m.ncols):
            acc = acc + m[i, j] * vec[j]
        out.append(acc)
    return out


def nullspace_vector_check(m: Matrix, v: Sequence) -> bool:
    """True iff m @ v is exactly the zero vector."""
    ring = m.ring
    return all(ring.is_zero(x) for x in matvec(m, v))


def inverse(m: Matrix) -> Matrix:
    """Exact inverse over the fraction field; the product is re-verified."""
    n = _square(m)
    field = m.ring.field
    mf = m.to_field()
    a = [list(mf.data[i * n:(i + 1) * n]) for i in range(n)]
    inv = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    is_zero = field.is_zero
    for k in range(n):
        if is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    inv[k], inv[r] = inv[r], inv[k]
                    break
            else:
                raise ArithmeticError("matrix is singular")
        pivot = a[k][k]
        for j in range(n):
            a[k][j] = a[k][j] / pivot
            inv[k][j] = inv[k][j] / pivot
        for i in range(n):
            if i != k and not is_zero(a[i][k]):
                f = a[i][k]
                for j in range(n):
                    a[i][j] = a[i][j] - f * a[k][j]
                    inv[i][j] = inv[i][j] - f * inv[k][j]
    result = Matrix.from_rows(inv, field) if n else Matrix(0, 0, [], field)
    if n:
        prod = mf * result
        ident = Matrix.identity(n, field)
        if prod != ident:
            raise ArithmeticError("inverse verification failed")
    return result


def rank(m: Matrix) -> int:
    """Rank via exact Gaussian elimination over the fraction field."""
    field = m.ring.field
    mf = m.to_field()
    nr, nc = m.nrows, m.ncols
    a = [list(mf.data[i * nc:(i + 1) * nc]) for i in range(nr)]
    is_zero = field.is_zero
    r = 0
    for c in range(nc):
        pivot_row = None
        for i in range(r, nr):
            if not is_zero(a[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, nr):
            if not is_zero(a[i][c]):
                f = a[i][c] / pivot
                for j in range(c, nc):
                    a[i][j] = a[i][j] - f * a[r][j]
        r += 1
        if r == nr:
            break
    return r
