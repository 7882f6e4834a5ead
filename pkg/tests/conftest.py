"""Shared strategies and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from p2walls import ChernChar, hilbert_poly


@st.composite
def chern_chars(draw, min_rank=1, max_rank=8):
    """Integral characters built from (r, c1, c2) so validity is automatic."""
    r = draw(st.integers(min_value=min_rank, max_value=max_rank))
    c1 = draw(st.integers(min_value=-12, max_value=12))
    c2 = draw(st.integers(min_value=-12, max_value=12))
    if r == 0 and c1 == 0 and c2 == 0:
        c2 = 1
    return ChernChar(r, c1, Fraction(c1 * c1 - 2 * c2, 2))


def random_char(rng: random.Random, min_rank=1, max_rank=8) -> ChernChar:
    r = rng.randint(min_rank, max_rank)
    c1 = rng.randint(-12, 12)
    c2 = rng.randint(-12, 12)
    return ChernChar(r, c1, Fraction(c1 * c1 - 2 * c2, 2))


def euler_pair_closed_form(x: ChernChar, y: ChernChar) -> Fraction:
    """The Riemann-Roch closed form; the independent oracle for euler_pair."""
    return x.r * y.r * (hilbert_poly(y.mu - x.mu) - x.disc - y.disc)


def farey_pred_bruteforce(mu: Fraction, n: int) -> Fraction:
    """Largest a/b < mu with b <= n, by plain enumeration over denominators."""
    best = None
    for b in range(1, n + 1):
        top = mu * b
        a = int(top) - 1 if top.denominator == 1 else (top.numerator // top.denominator)
        cand = Fraction(a, b)
        if best is None or cand > best:
            best = cand
    return best


@pytest.fixture
def rng():
    return random.Random(0x5EED)
