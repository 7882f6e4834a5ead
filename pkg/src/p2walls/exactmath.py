"""Exact rational and quadratic-irrational arithmetic, plus Farey neighbors.

Rationals are ``fractions.Fraction`` (always reduced, arbitrary precision);
``Rat`` is an alias so signatures read like the domain.  ``QuadVal`` models
the numbers a + sqrt(q) and a - sqrt(q) needed for wall endpoints and
interval half-widths, with ordering decided purely by sign analysis and
squaring.  No floating point enters any comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

Rat = Fraction


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _exact_sqrt(x: Fraction):
    """sqrt(x) as a Fraction when x is a perfect square of a rational, else None."""
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign_with_radical(a: Fraction, s: int, q: Fraction) -> int:
    """Sign of a + s*sqrt(q) with s in {-1, 0, +1} and q > 0 whenever s != 0.

    Case table:
      s = 0          -> sign(a)
      a = 0          -> s
      sign(a) = s    -> s                      (both terms pull the same way)
      sign(a) = -s   -> s * sign(q - a^2)      (|a| vs sqrt(q), one squaring)
    """
    if s == 0:
        return _sgn(a)
    if a == 0:
        return s
    if _sgn(a) == s:
        return s
    return s * _sgn(q - a * a)


@total_ordering
class QuadVal:
    """The real number ``a + sign*sqrt(q)`` with rational a, q >= 0.

    Construction normalizes: a zero radicand clears the sign, and a
    radicand that is a perfect square of a rational is folded into the
    rational part, so e.g. QuadVal(0, 4) and QuadVal(2) are structurally
    equal and an exactly-rational wall endpoint compares as such.

    Ordering resolves x ? y by moving terms and squaring at most twice:

      d + s1*sqrt(q1)  ?  s2*sqrt(q2)            (d = x.a - y.a)
        s2 = 0: single-radical sign of the left side.
        signs of the two sides differ: decided without squaring.
        both sides positive:  compare squares -> one more single-radical sign.
        both sides negative:  same, with the comparison reversed.
    """

    __slots__ = ("a", "q", "sign")

    def __init__(self, a, q=0, sign=1):
        a = Fraction(a)
        q = Fraction(q)
        if q < 0:
            raise ValueError("radicand must be nonnegative")
        if q == 0:
            sign = 0
        if sign == 0:
            q = Fraction(0)
        if sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if sign != 0:
            root = _exact_sqrt(q)
            if root is not None:
                a = a + sign * root
                q = Fraction(0)
                sign = 0
        self.a = a
        self.q = q
        self.sign = sign

    @classmethod
    def combination(cls, a, coeff, q) -> "QuadVal":
        """The value a + coeff*sqrt(q) for arbitrary rational coeff."""
        coeff = Fraction(coeff)
        return cls(a, coeff * coeff * Fraction(q), _sgn(coeff))

    @property
    def is_rational(self) -> bool:
        return self.sign == 0

    def as_fraction(self) -> Fraction:
        if self.sign != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _cmp(self, other) -> int:
        if isinstance(other, Rational):
            other = QuadVal(other)
        elif not isinstance(other, QuadVal):
            return NotImplemented
        d = self.a - other.a
        s1, q1 = self.sign, self.q
        s2, q2 = other.sign, other.q
        if s2 == 0:
            return _sign_with_radical(d, s1, q1)
        if s1 == 0:
            return _sign_with_radical(d, -s2, q2)
        if s1 == s2 and q1 == q2:
            return _sgn(d)
        left = _sign_with_radical(d, s1, q1)
        if left != s2:
            return 1 if left > s2 else -1
        # both sides share the sign s2; compare squares of d + s1*sqrt(q1) and sqrt(q2)
        sq = _sign_with_radical(d * d + q1 - q2, _sgn(d) * s1, 4 * d * d * q1)
        return sq if s2 > 0 else -sq

    def __eq__(self, other):
        c = self._cmp(other)
        return c == 0 if c is not NotImplemented else NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c < 0 if c is not NotImplemented else NotImplemented

    __hash__ = None

    def __neg__(self) -> "QuadVal":
        return QuadVal(-self.a, self.q, -self.sign)

    def __add__(self, other) -> "QuadVal":
        if isinstance(other, Rational):
            return QuadVal(self.a + Fraction(other), self.q, self.sign)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "QuadVal":
        if isinstance(other, Rational):
            return self + (-Fraction(other))
        return NotImplemented

    def __mul__(self, other) -> "QuadVal":
        if isinstance(other, Rational):
            k = Fraction(other)
            return QuadVal(self.a * k, self.q * k * k, self.sign * _sgn(k))
        return NotImplemented

    __rmul__ = __mul__

    def _bracket(self, digits: int):
        """Exact rational bounds lo <= value <= hi with hi - lo <= 10**-digits."""
        if self.sign == 0:
            return self.a, self.a
        scale = 10 ** digits
        n, d = self.q.numerator, self.q.denominator
        r = math.isqrt(n * d * scale * scale)
        lo_root = Fraction(r, d * scale)
        hi_root = Fraction(r + 1, d * scale)
        if self.sign > 0:
            return self.a + lo_root, self.a + hi_root
        return self.a - hi_root, self.a - lo_root

    def __float__(self) -> float:
        lo, hi = self._bracket(20)
        return float((lo + hi) / 2)

    def __floor__(self) -> int:
        if self.sign == 0:
            return math.floor(self.a)
        lo, hi = self._bracket(8)
        fl, fh = math.floor(lo), math.floor(hi)
        if fl == fh:
            return fl
        # an integer sits inside the bracket; the value itself is irrational
        return fh if self._cmp(QuadVal(fh)) > 0 else fl

    def decimal(self, places: int = 4) -> str:
        """Round-half-away-from-zero decimal rendering, exact in the rational case."""
        if self.sign == 0:
            return decimal_str(self.a, places)
        digits = places + 6
        while True:
            lo, hi = self._bracket(digits)
            slo, shi = decimal_str(lo, places), decimal_str(hi, places)
            if slo == shi:
                return slo
            digits *= 2

    def __str__(self) -> str:
        if self.sign == 0:
            return str(self.a)
        op = "+" if self.sign > 0 else "-"
        return f"{self.a} {op} sqrt({self.q})"

    def __repr__(self) -> str:
        return f"QuadVal({self.a!r}, {self.q!r}, sign={self.sign})"


def quad_cmp(x, y) -> int:
    """Exact three-way comparison (-1, 0, +1) of QuadVal/rational values."""
    if not isinstance(x, QuadVal):
        x = QuadVal(x)
    c = x._cmp(y)
    if c is NotImplemented:
        raise TypeError(f"cannot compare QuadVal with {type(y).__name__}")
    return c


def decimal_str(x: Fraction, places: int) -> str:
    """Decimal string of a rational, round half away from zero, fixed places."""
    x = Fraction(x)
    scale = 10 ** places
    q, r = divmod(abs(x.numerator) * scale * 2 + x.denominator, 2 * x.denominator)
    del r
    sign = "-" if x < 0 and q > 0 else ""
    whole, frac = divmod(q, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def rat_str(x: Fraction) -> str:
    """Canonical rendering "p/q", omitting "/q" when the denominator is one."""
    return str(Fraction(x))


def parse_rat(text: str) -> Fraction:
    """Parse a rational literal "p" or "p/q"."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        from .errors import ParseError

        raise ParseError(f"not a rational literal: {text!r}") from exc


def farey_pred(mu, n: int) -> Fraction:
    """Largest rational strictly below mu with reduced denominator at most n.

    Computed by the extended-Euclid / Stern-Brocot method: for mu = p/q in
    lowest terms with q >= 2, the left Farey neighbor a/b satisfies
    p*b - q*a = 1, so b is the largest solution of p*b = 1 (mod q) not
    exceeding n.  Integers step down by exactly 1/n.
    """
    if n < 1:
        raise ValueError("Farey order must be a positive integer")
    mu = Fraction(mu)
    p, q = mu.numerator, mu.denominator
    if q > n:
        raise ValueError(f"denominator of {mu} exceeds the Farey order {n}")
    if q == 1:
        return Fraction(p * n - 1, n)
    b = pow(p, -1, q)
    b += ((n - b) // q) * q
    return Fraction((p * b - 1) // q, b)
