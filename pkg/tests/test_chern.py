from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from p2walls import (
    ChernChar,
    char_product,
    disc_lattice,
    euler_pair,
    from_invariants,
    sym_pair,
)
from p2walls.errors import NonPositiveRank, NotIntegral

from conftest import chern_chars, euler_pair_closed_form

F = Fraction


def test_invariants_examples():
    assert ChernChar(6, 2, -4).invariants() == (F(1, 3), F(13, 18))
    assert ChernChar(1, 0, 0).invariants() == (0, 0)
    # the exceptional slope-2/5 bundle: (5, 2, -2) in raw coordinates
    assert ChernChar(5, 2, -2).invariants() == (F(2, 5), F(12, 25))


def test_invariants_need_positive_rank():
    with pytest.raises(NonPositiveRank):
        ChernChar(0, 1, F(1, 2)).invariants()


def test_from_invariants_examples():
    assert from_invariants(6, F(1, 3), F(13, 18)) == ChernChar(6, 2, -4)
    assert from_invariants(1, 0, 0) == ChernChar(1, 0, 0)
    with pytest.raises(NotIntegral):
        from_invariants(3, F(1, 2), 0)


def test_rejects_non_lattice_ch2():
    with pytest.raises(NotIntegral):
        ChernChar(5, 2, F(-3, 2))  # c2 would be half-integral
    with pytest.raises(NotIntegral):
        ChernChar(0, 0, 0)


@given(chern_chars())
def test_invariants_round_trip(xi):
    mu, disc = xi.invariants()
    assert from_invariants(xi.r, mu, disc) == xi


def test_euler_examples():
    assert ChernChar(1, 0, 0).euler == 1
    assert from_invariants(6, F(1, 3), F(13, 18)).euler == 5
    assert ChernChar(0, 1, F(-3, 2)).euler == 0


def test_euler_pair_examples():
    assert euler_pair(from_invariants(5, F(2, 5), F(12, 25)), from_invariants(1, 1, 2)) == -2
    assert euler_pair(from_invariants(1, 1, 1), ChernChar(1, 0, 0)) == -1
    assert euler_pair(ChernChar(1, 0, 0), from_invariants(6, F(1, 3), F(13, 18))) == 5


def test_sym_pair_examples():
    assert sym_pair(ChernChar(1, 0, 0), ChernChar(1, 0, 0)) == 1
    assert sym_pair(ChernChar(6, 2, -4), ChernChar(0, -6, 11)) == 0
    assert sym_pair(ChernChar(5, 0, 0), ChernChar(-2, -1, F(7, 2))) == 0


@given(chern_chars(), chern_chars())
def test_euler_pair_matches_closed_form(x, y):
    assert euler_pair(x, y) == euler_pair_closed_form(x, y)


@given(chern_chars(min_rank=-6, max_rank=6), chern_chars(min_rank=-6, max_rank=6))
def test_sym_pair_symmetric_and_dual_relation(x, y):
    assert sym_pair(x, y) == sym_pair(y, x)
    assert euler_pair(x, y) == sym_pair(x.dual(), y)


@given(chern_chars())
def test_euler_is_integral(xi):
    assert xi.euler.denominator == 1


def test_twist_examples():
    assert ChernChar(6, 2, -4).twist(-1) == ChernChar(6, -4, -3)
    xi = ChernChar(3, 2, -1)
    assert xi.twist(0) == xi


@given(chern_chars(), st.integers(min_value=-5, max_value=5))
def test_twist_preserves_disc_and_shifts_slope(xi, n):
    twisted = xi.twist(n)
    assert twisted.disc == xi.disc
    assert twisted.mu == xi.mu + n
    assert twisted.twist(-n) == xi


def test_elem_mod_examples():
    assert from_invariants(5, F(3, 5), F(12, 25)).elem_mod(1) == from_invariants(
        5, F(3, 5), F(17, 25)
    )
    xi = from_invariants(2, F(1, 2), F(3, 8))
    assert xi.elem_mod(0) == xi
    assert xi.elem_mod(2) == from_invariants(2, F(1, 2), F(11, 8))


@given(chern_chars(), st.integers(min_value=0, max_value=8))
def test_elem_mod_drops_euler_by_k(xi, k):
    modified = xi.elem_mod(k)
    assert modified.euler == xi.euler - k
    assert modified.mu == xi.mu
    assert modified.disc == xi.disc + F(k, xi.r)


def test_disc_lattice_examples():
    lat = disc_lattice(4, 1)
    assert lat.at_least(F(21, 32)) == F(21, 32)
    assert lat.above(F(21, 32)) == F(29, 32)
    assert disc_lattice(6, 3).above(F(5, 8)) == F(17, 24)
    lat1 = disc_lattice(1, 0)
    assert lat1.base == 0 and lat1.step == 1


@given(chern_chars())
def test_disc_lattice_contains_every_disc(xi):
    lat = disc_lattice(xi.r, xi.c1)
    assert lat.contains(xi.disc)
    assert lat.contains(xi.elem_mod(3).disc)
    assert lat.at_least(xi.disc) == xi.disc


@given(chern_chars(), chern_chars())
def test_char_product_is_commutative(x, y):
    assert char_product(x, y) == char_product(y, x)
