from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from p2walls import QuadVal, decimal_str, farey_pred, quad_cmp

from conftest import farey_pred_bruteforce


def test_quad_cmp_perfect_square_folds():
    assert quad_cmp(QuadVal(0, 4), QuadVal(2)) == 0
    assert QuadVal(0, 4).is_rational
    assert QuadVal(0, 4).as_fraction() == 2


def test_quad_cmp_golden_ratio_like():
    # (3 - sqrt 5)/2 > 1/3 because 7/3 > sqrt 5, i.e. 49/9 > 5
    x = QuadVal(Fraction(3, 2), Fraction(5, 4), sign=-1)
    assert quad_cmp(x, Fraction(1, 3)) == 1


def test_quad_cmp_shifted_square():
    assert quad_cmp(QuadVal(-2, 4), 1) == -1


def test_quad_cmp_mixed_signs():
    assert quad_cmp(QuadVal(0, 2), QuadVal(0, 3)) == -1
    assert quad_cmp(QuadVal(1, 2), QuadVal(0, 2, sign=-1)) == 1
    assert quad_cmp(QuadVal(0, 2, sign=-1), QuadVal(0, 3, sign=-1)) == 1
    assert quad_cmp(QuadVal(Fraction(1, 2), 2, sign=-1), QuadVal(-1)) == -1
    # equal values written differently: 1 + sqrt(2) vs 3 - sqrt(2) differ
    assert quad_cmp(QuadVal(1, 2), QuadVal(3, 2, sign=-1)) == 1


quadvals = st.builds(
    QuadVal,
    st.fractions(min_value=-10, max_value=10, max_denominator=40),
    st.fractions(min_value=0, max_value=30, max_denominator=40),
    st.sampled_from([-1, 1]),
)


@given(quadvals)
def test_quad_cmp_reflexive(x):
    assert quad_cmp(x, x) == 0


@given(quadvals, quadvals)
def test_quad_cmp_antisymmetric(x, y):
    assert quad_cmp(x, y) == -quad_cmp(y, x)


@given(quadvals, quadvals, quadvals)
def test_quad_cmp_transitive(x, y, z):
    vals = sorted([x, y, z])
    assert quad_cmp(vals[0], vals[1]) <= 0
    assert quad_cmp(vals[1], vals[2]) <= 0
    assert quad_cmp(vals[0], vals[2]) <= 0


@given(quadvals)
def test_quadval_float_and_decimal_agree(x):
    approx = float(x.decimal(6))
    assert abs(approx - float(x)) <= 1.01e-6


@given(quadvals)
def test_quadval_floor(x):
    import math

    f = math.floor(x)
    assert quad_cmp(x, f) >= 0
    assert quad_cmp(x, f + 1) < 0


def test_decimal_str_rounds_half_away_from_zero():
    assert decimal_str(Fraction(9, 8), 2) == "1.13"
    assert decimal_str(Fraction(-9, 8), 2) == "-1.13"
    assert decimal_str(Fraction(1, 4), 1) == "0.3"
    assert decimal_str(Fraction(-1, 1000), 2) == "0.00"
    assert decimal_str(Fraction(2), 0) == "2"


def test_quadval_decimal_of_irrational():
    x = QuadVal(Fraction(-11, 6), Fraction(145, 36))
    assert x.decimal(4) == "0.1736"
    assert str(x) == "-11/6 + sqrt(145/36)"


def test_farey_pred_examples():
    assert farey_pred(Fraction(1, 3), 6) == Fraction(1, 4)
    assert farey_pred(Fraction(1), 1) == 0
    assert farey_pred(Fraction(3, 5), 5) == Fraction(1, 2)


def test_farey_pred_rejects_large_denominator():
    with pytest.raises(ValueError):
        farey_pred(Fraction(1, 7), 6)


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=30),
    st.integers(min_value=1, max_value=30),
)
def test_farey_pred_matches_bruteforce(mu, n):
    if mu.denominator > n:
        n = mu.denominator
    got = farey_pred(mu, n)
    assert got == farey_pred_bruteforce(mu, n)
    # classical neighbor determinant
    assert mu.numerator * got.denominator - mu.denominator * got.numerator == 1
    assert got.denominator <= n
