"""Exact integer and rational scalar arithmetic.

Python integers are arbitrary precision and ``fractions.Fraction`` keeps the
canonical reduced form (positive denominator, gcd(num, den) = 1), so they are
used directly as the ground rings.  This module adds the binomial-coefficient
conventions that all the identity checks rely on, a couple of product-form
helpers that avoid removable poles, and JSON codecs for values of unbounded
size.

Conventions for ``binomial(a, k)``:

* ``k < 0`` always gives 0,
* ``a < 0`` uses the falling-factorial continuation, equivalently the
  reflection ``binomial(-a, k) = (-1)**k * binomial(a + k - 1, k)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

ExactInt = int
ExactRat = Fraction


def binomial(a: int, k: int) -> int:
    """Binomial coefficient for arbitrary integer upper argument.

    Returns 0 for ``k < 0``; for ``a < 0`` evaluates the falling-factorial
    product ``a(a-1)...(a-k+1)/k!`` exactly.
    """
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k)
    # negative upper index: (-1)^k * C(k - a - 1, k)
    value = math.comb(k - a - 1, k)
    return -value if k & 1 else value


def choose2(a: int) -> int:
    """``a*(a-1)/2`` for any integer a (meaningful for negative a too)."""
    return a * (a - 1) // 2


def falling(x, k: int):
    """Falling factorial ``x(x-1)...(x-k+1)`` with k >= 0 factors.

    Works for any value supporting ``*`` and ``-`` with ints (int, Fraction).
    """
    out = x - x + 1 if not isinstance(x, int) else 1
    for i in range(k):
        out *= x - i
    return out


def gould_product(n: int, x, r: int):
    """Value of the degree-n Gould basis polynomial at x, via its product form.

    For ``n >= 1`` this is ``x * (x+rn-1)(x+rn-2)...(x+rn-n+1) / n!``; the
    quotient by ``rn + x`` present in the closed form has been cancelled, so
    the evaluation is defined for every x (including ``x = -rn``).
    """
    if n == 0:
        return x - x + 1 if not isinstance(x, int) else 1
    num = x
    for l in range(1, n):
        num = num * (x + r * n - l)
    value = Fraction(num, math.factorial(n))
    if value.denominator == 1 and isinstance(x, int):
        return int(value)
    return value


def lucas_value(m: int, j: int):
    """``(m/(m-j)) * binomial(m-j, j)`` evaluated through its cancelled form.

    ``m * (m-j-1)(m-j-2)...(m-2j+1) / j!`` for ``j >= 1`` and 1 for
    ``j = 0``, defined for every integer m (also m = j, where the raw
    quotient has a removable pole).
    """
    if j == 0:
        return 1
    num = m
    for l in range(j - 1):
        num *= m - j - 1 - l
    value = Fraction(num, math.factorial(j))
    if value.denominator != 1:
        raise ArithmeticError(f"lucas_value({m}, {j}) is not an integer")
    return int(value)


# ---------------------------------------------------------------------------
# JSON codecs: integers as decimal strings, rationals as {"num", "den"}.
# ---------------------------------------------------------------------------

def int_to_json(n: int) -> str:
    return str(n)


def int_from_json(s: str) -> int:
    return int(s)


def rat_to_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rat_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))
