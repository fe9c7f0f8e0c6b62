import random
from fractions import Fraction

import pytest

from catdet.exact import binomial
from catdet.linalg import (
    FRAC,
    INT,
    QPOLY,
    Matrix,
    det_bareiss,
    det_cofactor,
    det_condensation,
    inverse,
    matvec,
    nullspace_vector_check,
    rank,
)
from catdet.qseries import ONE, Q, QPoly

INTRO_4X4 = Matrix.from_rows(
    [
        [1, 1, 0, 0],
        [1, 3, 1, 0],
        [1, 6, 5, 1],
        [1, 10, 15, 7],
    ]
)


def random_int_matrix(rng, n, lo=-9, hi=9):
    return Matrix(n, n, [rng.randint(lo, hi) for _ in range(n * n)], INT)


def random_qpoly(rng):
    terms = [(2 * rng.randint(0, 3), rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))]
    return QPoly(terms)


def random_qpoly_matrix(rng, n):
    return Matrix(n, n, [random_qpoly(rng) for _ in range(n * n)], QPOLY)


def test_entry_count_must_match_dimensions():
    with pytest.raises(ValueError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        det_bareiss(Matrix(2, 3, [1, 2, 3, 4, 5, 6]))


def test_trivial_determinants():
    assert det_bareiss(Matrix(0, 0, [])) == 1
    assert det_condensation(Matrix(0, 0, [])) == 1
    assert det_cofactor(Matrix(0, 0, [])) == 1
    m = Matrix(1, 1, [7])
    assert det_bareiss(m) == 7
    assert det_condensation(m) == 7


def test_intro_matrix_is_catalan_4():
    assert det_bareiss(INTRO_4X4) == 14
    assert det_condensation(INTRO_4X4) == 14
    assert det_cofactor(INTRO_4X4) == 14


def test_hankel_2x2_catalan():
    m = Matrix.from_rows([[2, 5], [5, 14]])
    assert det_cofactor(m) == 3
    assert det_condensation(m) == 3


def test_engines_agree_on_random_integer_matrices():
    rng = random.Random(1234)
    for _ in range(80):
        n = rng.randint(0, 6)
        m = random_int_matrix(rng, n)
        d = det_cofactor(m)
        assert det_bareiss(m) == d
        assert det_condensation(m) == d


def test_engines_agree_on_random_qpoly_matrices():
    rng = random.Random(99)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = random_qpoly_matrix(rng, n)
        d = det_cofactor(m)
        assert det_bareiss(m) == d
        assert det_condensation(m) == d


def test_engines_agree_on_fraction_matrices():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 5)
        m = Matrix(
            n, n,
            [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(n * n)],
            FRAC,
        )
        assert det_bareiss(m) == det_cofactor(m)


def test_det_transpose_invariance():
    rng = random.Random(42)
    for _ in range(30):
        m = random_int_matrix(rng, rng.randint(1, 5))
        assert det_bareiss(m) == det_bareiss(m.transpose())


def test_det_multiplicativity_4x4():
    rng = random.Random(7)
    for _ in range(20):
        a = random_int_matrix(rng, 4, -5, 5)
        b = random_int_matrix(rng, 4, -5, 5)
        assert det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b)


def test_zero_pivot_row_swap_and_singular():
    m = Matrix.from_rows([[0, 1], [1, 0]])
    assert det_bareiss(m) == -1
    singular = Matrix.from_rows([[1, 2], [2, 4]])
    assert det_bareiss(singular) == 0
    with_zero_col = Matrix.from_rows([[0, 1, 2], [0, 3, 4], [0, 5, 6]])
    assert det_bareiss(with_zero_col) == 0


def test_condensation_zero_interior_falls_back():
    m = Matrix.from_rows([[1, 2, 3], [4, 0, 6], [7, 8, 9]])
    assert det_condensation(m) == det_cofactor(m)
    # 4x4 with zero in the interior minor during the second stage
    m2 = Matrix.from_rows(
        [[1, 1, 1, 1], [1, 1, 2, 3], [2, 1, 1, 4], [3, 4, 1, 1]]
    )
    assert det_condensation(m2) == det_cofactor(m2)


def test_inverse_identity_and_verification():
    ident = Matrix.identity(4)
    assert inverse(ident) == Matrix.identity(4, FRAC)
    m = Matrix.from_rows([[2, 1], [1, 1]])
    inv = inverse(m)
    assert inv == Matrix.from_rows([[1, -1], [-1, 2]], FRAC)
    with pytest.raises(ArithmeticError):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_inverse_of_signed_binomial_is_ballot_triangle():
    n = 7
    signed = Matrix.build(
        n, n, lambda i, j: (-1) ** ((i - j) % 2) * binomial(i + j, i - j), INT
    )
    inv = inverse(signed)
    # Catalan triangle rows from the displayed table
    expected = [
        [1, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0],
        [2, 3, 1, 0, 0, 0, 0],
        [5, 9, 5, 1, 0, 0, 0],
        [14, 28, 20, 7, 1, 0, 0],
        [42, 90, 75, 35, 9, 1, 0],
        [132, 297, 275, 154, 54, 11, 1],
    ]
    assert inv == Matrix.from_rows(expected, FRAC)


def test_matvec_and_nullspace_check():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    assert matvec(m, [2, -1]) == [0, 0]
    assert nullspace_vector_check(m, [2, -1])
    assert not nullspace_vector_check(m, [1, 0])
    assert nullspace_vector_check(m, [0, 0])


def test_rank():
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix(2, 3, [1, 2, 3, 2, 4, 6])) == 1


def test_qpoly_matrix_det():
    m = Matrix.from_rows([[ONE, ONE], [Q, ONE + Q + Q * Q]], QPOLY)
    # [3] - q = 1 + q^2
    assert det_bareiss(m) == ONE + Q * Q
