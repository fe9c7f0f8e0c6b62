"""Monic orthogonal polynomials from three-term recurrences, and their moments.

A :class:`FavardSystem` is the pair of coefficient sequences s(n), t(n) of

    p_n(x) = (x - s(n-1)) p_(n-1)(x) - t(n-2) p_(n-2)(x),   p_0 = 1,

over one of the exact rings.  :class:`FavardTables` grows, on demand, the
true coefficient table of the p_n, the sign-stripped table p(n, j) with
p_n(x) = sum_j (-1)^(n-j) p(n, j) x^j, and the moment table c(n, j) defined by

    c(0, j) = [j = 0]
    c(n, 0) = s(0) c(n-1, 0) + t(0) c(n-1, 1)
    c(n, j) = c(n-1, j-1) + s(j) c(n-1, j) + t(j) c(n-1, j+1)

whose first column is the moment sequence of the functional with
Lambda(p_n) = [n = 0].

The module also verifies the shifted-Hankel bridge: the n x n determinant of
p(i+m, j) equals the ratio of the m x m Hankel determinants of the moments
shifted by n and by 0 (checked exactly, in cross-multiplied form), plus the
two single-shift product formulas, and can recover s(n), t(n) either from a
moment sequence or from an explicit coefficient table.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from catdet.linalg import INT, QPOLY, QRAT, Matrix, Ring, det_bareiss
from catdet.qseries import QPoly, QRat, q_binomial, q_int

__all__ = [
    "FavardSystem",
    "FavardTables",
    "InconsistentRecurrenceError",
    "tyson_check",
    "hankel_shift_checks",
    "orthogonality_defect",
    "moments_from_system",
    "system_from_moments",
    "system_from_coeff_rows",
    "fibonacci_system",
    "lucas_variant_system",
    "carlitz_system",
    "q_chebyshev_system",
    "geometric_q_system",
    "random_integer_system",
]


class InconsistentRecurrenceError(ValueError):
    """No three-term recurrence reproduces the given coefficient table."""


class FavardSystem:
    """Recurrence data (s, t) over a scalar ring."""

    def __init__(self, s: Callable[[int], object], t: Callable[[int], object],
                 ring: Ring, name: str = ""):
        self.s = s
        self.t = t
        self.ring = ring
        self.name = name

    def tables(self) -> "FavardTables":
        return FavardTables(self)

    def __repr__(self):
        return f"FavardSystem({self.name or 'anonymous'}, ring={self.ring.name})"


class FavardTables:
    """Lazily grown coefficient and moment tables of a Favard system."""

    def __init__(self, system: FavardSystem):
        self.system = system
        ring = system.ring
        self._one = ring.one
        self._zero = ring.zero
        self._coeffs: list[list] = [[self._one]]
        self._c: list[list] = [[self._one]]

    # -- table growth -------------------------------------------------------

    def _ensure_coeffs(self, n: int) -> None:
        s, t = self.system.s, self.system.t
        rows = self._coeffs
        while len(rows) <= n:
            m = len(rows)  # building row m
            prev = rows[m - 1]
            prev2 = rows[m - 2] if m >= 2 else None
            sn = s(m - 1)
            tn = t(m - 2) if m >= 2 else None
            row = []
            for j in range(m + 1):
                v = prev[j - 1] if j >= 1 else self._zero
                if j < m:
                    v = v - sn * prev[j]
                if prev2 is not None and j < m - 1:
                    v = v - tn * prev2[j]
                row.append(v)
            rows.append(row)

    def _ensure_moments(self, n: int) -> None:
        s, t = self.system.s, self.system.t
        rows = self._c
        while len(rows) <= n:
            m = len(rows)
            prev = rows[m - 1]
            # s(j)/t(j) are only evaluated when they multiply an in-range
            # entry, so finite recovered systems can fill their full cone
            v = s(0) * prev[0]
            if m >= 2:
                v = v + t(0) * prev[1]
            row = [v]
            for j in range(1, m + 1):
                v = prev[j - 1]
                if j < m:
                    v = v + s(j) * prev[j]
                if j + 1 < m:
                    v = v + t(j) * prev[j + 1]
                row.append(v)
            rows.append(row)

    # -- accessors ----------------------------------------------------------

    def coeff(self, n: int, j: int):
        """True coefficient of x^j in p_n."""
        if j < 0 or j > n:
            return self._zero
        self._ensure_coeffs(n)
        return self._coeffs[n][j]

    def p_entry(self, n: int, j: int):
        """Sign-stripped table entry p(n, j) = (-1)^(n-j) [x^j] p_n."""
        v = self.coeff(n, j)
        return v if (n - j) % 2 == 0 else -v

    def coeff_row(self, n: int) -> list:
        self._ensure_coeffs(n)
        return list(self._coeffs[n])

    def c(self, n: int, j: int):
        if j < 0 or j > n:
            return self._zero
        self._ensure_moments(n)
        return self._c[n][j]

    def moment(self, n: int):
        return self.c(n, 0)

    def moments(self, count: int) -> list:
        self._ensure_moments(max(count - 1, 0))
        return [self.c(n, 0) for n in range(count)]

    def functional(self, coeff_vec: Sequence):
        """Pair a coefficient vector with the moment sequence."""
        self._ensure_moments(max(len(coeff_vec) - 1, 0))
        acc = self._zero
        for i, v in enumerate(coeff_vec):
            acc = acc + v * self.c(i, 0)
        return acc

    # -- derived matrices ---------------------------------------------------

    def hankel(self, shift: int, m: int) -> Matrix:
        """Hankel matrix (M_(shift+i+j)) of size m."""
        self._ensure_moments(shift + 2 * m)
        return Matrix.build(m, m, lambda i, j: self.c(shift + i + j, 0), self.system.ring)

    def p_matrix(self, m: int, n: int) -> Matrix:
        """The n x n matrix (p(i+m, j))."""
        self._ensure_coeffs(n - 1 + m if n else m)
        return Matrix.build(n, n, lambda i, j: self.p_entry(i + m, j), self.system.ring)


def tyson_check(sys_or_tables, n: int, m: int) -> bool:
    """Shifted-Hankel bridge: det(p(i+m,j)) * det(M_(i+j)) = det(M_(n+i+j)).

    All three determinants are m x m or n x n and exact; the base Hankel
    determinant must be nonzero (raises ArithmeticError otherwise).
    """
    tab = sys_or_tables if isinstance(sys_or_tables, FavardTables) else sys_or_tables.tables()
    ring = tab.system.ring
    h0 = det_bareiss(tab.hankel(0, m))
    if ring.is_zero(h0):
        raise ArithmeticError("base Hankel determinant vanishes")
    hn = det_bareiss(tab.hankel(n, m))
    p = det_bareiss(tab.p_matrix(m, n))
    return p * h0 == hn


def hankel_shift_checks(sys_or_tables, m: int) -> bool:
    """Single and double shift formulas for Hankel determinants.

    det(M_(i+j+1)) = p(m, 0) det(M_(i+j)) and
    det(M_(i+j+2)) = v(m) det(M_(i+j)) with
    v(m) = sum_k p_k(0)^2 t(k) t(k+1) ... t(m-1).
    """
    tab = sys_or_tables if isinstance(sys_or_tables, FavardTables) else sys_or_tables.tables()
    t = tab.system.t
    h0 = det_bareiss(tab.hankel(0, m))
    h1 = det_bareiss(tab.hankel(1, m))
    h2 = det_bareiss(tab.hankel(2, m))
    if h1 != tab.p_entry(m, 0) * h0:
        return False
    v = tab._zero
    for k in range(m + 1):
        pk0 = tab.coeff(k, 0)
        term = pk0 * pk0
        for l in range(k, m):
            term = term * t(l)
        v = v + term
    return h2 == v * h0


def orthogonality_defect(tables: FavardTables, n: int):
    """Lambda(p_n) computed by pairing; should be [n = 0]."""
    return tables.functional(tables.coeff_row(n))


def moments_from_system(system: FavardSystem, count: int) -> list:
    """First ``count`` moments, touching only the dependency cone of column 0.

    Unlike the full triangular table this needs s(j), t(j) only for
    j <= (count-1)/2, so it also works for systems recovered from finitely
    many moments.
    """
    ring = system.ring
    zero = ring.zero
    s, t = system.s, system.t
    if count <= 0:
        return []
    out = [ring.one]
    row = [ring.one]  # row r stored for columns 0..min(r, count-1-r)
    for r in range(1, count):
        width = min(r, count - 1 - r)
        prev_width = len(row) - 1

        def at(j):
            return row[j] if 0 <= j <= prev_width else zero

        new = []
        for j in range(width + 1):
            if j == 0:
                v = s(0) * at(0) if 0 <= prev_width else zero
                if 1 <= prev_width:
                    v = v + t(0) * at(1)
            else:
                v = at(j - 1)
                if j <= prev_width:
                    v = v + s(j) * at(j)
                if j + 1 <= prev_width:
                    v = v + t(j) * at(j + 1)
            new.append(v)
        row = new
        out.append(row[0])
    return out


# ---------------------------------------------------------------------------
# recovery of (s, t)
# ---------------------------------------------------------------------------

def system_from_moments(moments: Sequence, ring: Ring, name: str = "recovered"
                        ) -> tuple[list, list, FavardSystem]:
    """Recover s(n), t(n) from a moment sequence over a fraction field.

    Uses the functional pairing: s(n) = L(x p_n^2)/L(p_n^2) and
    t(n-1) = L(p_n^2)/L(p_(n-1)^2).  Raises ArithmeticError on a vanishing
    norm (non-orthogonalizable moment prefix).
    """
    field = ring.field
    ms = [field.coerce(v) for v in moments]
    zero, one = field.zero, field.one

    def pair(vec):
        if len(vec) > len(ms):
            raise ValueError("moment sequence too short")
        acc = zero
        for i, v in enumerate(vec):
            acc = acc + v * ms[i]
        return acc

    def mul(a, b):
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return out

    s_list: list = []
    t_list: list = []
    p_prev: list = []
    p_cur: list = [one]
    norm_prev = None
    n = 0
    while 2 * n + 1 <= len(ms):
        sq = mul(p_cur, p_cur)
        norm = pair(sq)
        if norm == zero:
            raise ArithmeticError(f"vanishing norm at n = {n}: moments not orthogonalizable")
        if n >= 1:
            t_list.append(norm / norm_prev)
        if 2 * n + 2 > len(ms):
            break
        s_n = pair([zero] + sq) / norm
        s_list.append(s_n)
        # p_(n+1) = (x - s_n) p_n - t_(n-1) p_(n-1)
        shifted = [zero] + p_cur
        nxt = [shifted[i] - (s_n * p_cur[i] if i < len(p_cur) else zero)
               for i in range(len(shifted))]
        if n >= 1:
            tn1 = t_list[-1]
            for i in range(len(p_prev)):
                nxt[i] = nxt[i] - tn1 * p_prev[i]
        p_prev, p_cur = p_cur, nxt
        norm_prev = norm
        n += 1

    def s_fn(k, _s=s_list):
        return _s[k]

    def t_fn(k, _t=t_list):
        return _t[k]

    return s_list, t_list, FavardSystem(s_fn, t_fn, field, name)


def system_from_coeff_rows(rows: Sequence[Sequence], ring: Ring, name: str = "recovered"
                           ) -> tuple[list, list, FavardSystem]:
    """Recover s(n), t(n) from a monic true-coefficient table.

    Reads the two leading columns, then re-verifies the full recurrence on
    every coefficient; raises InconsistentRecurrenceError on any mismatch.
    """
    zero = ring.zero

    def a(n, j):
        return rows[n][j] if 0 <= j <= n else zero

    nmax = len(rows) - 1
    s_list = []
    t_list = []
    for n in range(1, nmax + 1):
        s_list.append(a(n - 1, n - 2) - a(n, n - 1))
    for n in range(2, nmax + 1):
        sn = s_list[n - 1]
        t_list.append(a(n - 1, n - 3) - sn * a(n - 1, n - 2) - a(n, n - 2))
    for n in range(1, nmax + 1):
        sn = s_list[n - 1]
        tn = t_list[n - 2] if n >= 2 else None
        for j in range(0, n + 1):
            expected = a(n - 1, j - 1) - sn * a(n - 1, j)
            if tn is not None:
                expected = expected - tn * a(n - 2, j)
            if a(n, j) != expected:
                raise InconsistentRecurrenceError(
                    f"coefficient table breaks the three-term recurrence at (n={n}, j={j})"
                )

    def s_fn(k, _s=s_list):
        return _s[k]

    def t_fn(k, _t=t_list):
        return _t[k]

    return s_list, t_list, FavardSystem(s_fn, t_fn, ring, name)


# ---------------------------------------------------------------------------
# named systems
# ---------------------------------------------------------------------------

def fibonacci_system() -> FavardSystem:
    """s = 0, t = 1: Fibonacci polynomials; even moments are Catalan numbers."""
    return FavardSystem(lambda n: 0, lambda n: 1, INT, "fibonacci")


def lucas_variant_system() -> FavardSystem:
    """s = 0, t(0) = 2, t(n) = 1: even moments are central binomials."""
    return FavardSystem(lambda n: 0, lambda n: 2 if n == 0 else 1, INT, "lucas-variant")


def catalan_moment_system() -> FavardSystem:
    """s(0) = 1, s(n) = 2, t = 1: the moments are the Catalan numbers.

    This is the even contraction of the Fibonacci system; its coefficient
    table p(i+1, j) is exactly the binomial(i+j+1, i-j+1) matrix family.
    """
    return FavardSystem(lambda n: 1 if n == 0 else 2, lambda n: 1, INT, "catalan")


def central_binomial_system() -> FavardSystem:
    """s = 2, t(0) = 2, t(n) = 1: the moments are binomial(2n, n).

    Even contraction of the Lucas variant; its coefficient table p(i+1, j)
    is the ((2i+2)/(i+j+1)) binomial(i+j+1, i-j+1) family.
    """
    return FavardSystem(lambda n: 2, lambda n: 2 if n == 0 else 1, INT, "central-binomial")


def carlitz_system() -> FavardSystem:
    """s = 0, t(n) = q^n: even moments are the Carlitz q-Catalan numbers."""
    return FavardSystem(
        lambda n: QPoly.const(0),
        lambda n: QPoly.monomial(2 * n),
        QPOLY,
        "carlitz",
    )


def q_chebyshev_system() -> FavardSystem:
    """Monic q-Chebyshev (second kind): s = 0,
    t(n) = q^(n+1) / ((1+q^(n+1))(1+q^(n+2)))."""
    one = QPoly.const(1)

    def t(n):
        return QRat(
            QPoly.monomial(2 * (n + 1)),
            (one + QPoly.monomial(2 * (n + 1))) * (one + QPoly.monomial(2 * (n + 2))),
        )

    return FavardSystem(lambda n: QRat(0), t, QRAT, "q-chebyshev")


def geometric_q_system() -> FavardSystem:
    """The system whose moments are q^(n(n-1)/2) (a q-deformation of (x-1)^n).

    s(k) = q^k [k+1] - q^(k-1) [k] and
    t(k) = q^(2k+1) [k+2 choose 2] - q^(2k-1) [k+1 choose 2] - s(k) q^k [k+1],
    derived from its explicit coefficient table; the recovery path in
    :func:`system_from_coeff_rows` cross-checks these closed forms.
    """

    def s(k):
        v = QPoly.monomial(2 * k) * q_int(k + 1)
        if k >= 1:
            v = v - QPoly.monomial(2 * (k - 1)) * q_int(k)
        return v

    def t(k):
        v = QPoly.monomial(2 * (2 * k + 1)) * q_binomial(k + 2, 2)
        if k >= 1:
            v = v - QPoly.monomial(2 * (2 * k - 1)) * q_binomial(k + 1, 2)
        return v - s(k) * QPoly.monomial(2 * k) * q_int(k + 1)

    return FavardSystem(s, t, QPOLY, "geometric-q")


def geometric_q_coeff(n: int, j: int) -> QPoly:
    """Explicit true coefficient (-1)^(n-j) [n choose j] q^((n-1)(n-j))."""
    v = q_binomial(n, j).shift(2 * (n - 1) * (n - j))
    return -v if (n - j) % 2 else v


def random_integer_system(rng, lo: int = -3, hi: int = 3) -> FavardSystem:
    """Seeded random small-integer system with t(n) != 0."""
    s_cache: dict[int, int] = {}
    t_cache: dict[int, int] = {}

    def s(n):
        if n not in s_cache:
            s_cache[n] = rng.randint(lo, hi)
        return s_cache[n]

    def t(n):
        if n not in t_cache:
            v = 0
            while v == 0:
                v = rng.randint(lo, hi)
            t_cache[n] = v
        return t_cache[n]

    return FavardSystem(s, t, INT, "random")


def hilbert_moments(count: int) -> list[Fraction]:
    """The moment sequence 1/(n+1) of the Hilbert matrix."""
    return [Fraction(1, n + 1) for n in range(count)]


def catalan_parity_moments(count: int) -> list[int]:
    """The sequence C_n mod 2 as integers from {0, 1}."""
    from catdet.sequences import catalan

    return [catalan(n) & 1 for n in range(count)]
