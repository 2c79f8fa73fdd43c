"""
Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Nothing here touches floating point.  Text forms are ``"p/q"`` for a
rational and ``"p/q+r/s i"`` for a Gaussian rational; both round-trip
through :func:`parse_rational` / :func:`parse_gauss`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

Rational = Fraction


def rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact: %r" % (x,))
    return Fraction(x)


def rat_arith(a, b, op: str) -> Fraction:
    a, b = rat(a), rat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError("unknown op %r" % (op,))


def format_rational(q: Fraction) -> str:
    return "%d/%d" % (q.numerator, q.denominator)


_RAT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(s: str) -> Fraction:
    m = _RAT.match(s)
    if m is None:
        raise ValueError("not a rational: %r" % (s,))
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError("zero denominator in %r" % (s,))
    return Fraction(int(num), int(den) if den else 1)


class GaussRational:
    """a + b*i with a, b rational.  Immutable and hashable."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        re, im = rat(re), rat(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "_hash", hash((re, im)))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, str):
            return parse_gauss(x)
        if isinstance(x, complex):
            raise TypeError("refusing to coerce a float complex %r" % (x,))
        return cls(x, 0)

    def __repr__(self):
        return "GaussRational(%s)" % format_gauss(self)

    def __str__(self):
        return format_gauss(self)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRational(a * c, 0)
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inv(self) -> "GaussRational":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other * self.inv()


def _lift(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational(x, 0)
    return None


ZERO = GaussRational(0)
ONE = GaussRational(1)
I_UNIT = GaussRational(0, 1)


def gauss_arith(z, w, op: str) -> GaussRational:
    z = GaussRational.coerce(z)
    if op == "conj":
        return z.conj()
    if op == "inv":
        return z.inv()
    w = GaussRational.coerce(w)
    if op == "add":
        return z + w
    if op == "sub":
        return z - w
    if op == "mul":
        return z * w
    if op == "div":
        return z / w
    raise ValueError("unknown op %r" % (op,))


def format_gauss(z: GaussRational) -> str:
    if z.im == 0:
        return format_rational(z.re)
    sign = "+" if z.im >= 0 else "-"
    return "%s%s%s i" % (format_rational(z.re), sign, format_rational(abs(z.im)))


_NUM = r"\d+(?:\s*/\s*\d+)?"
_GAUSS = re.compile(
    r"^\s*(?:(?P<re>[+-]?\s*%s)\s*)?"
    r"(?:(?P<sign>[+-])?\s*(?P<im>%s)?\s*(?P<i>i))?\s*$" % (_NUM, _NUM)
)


def parse_gauss(s: str) -> GaussRational:
    """Parse ``"p/q"``, ``"p/q+r/s i"``, ``"r/s i"``, ``"-i"`` and friends."""
    m = _GAUSS.match(s)
    if m is None or (m.group("re") is None and m.group("i") is None):
        raise ValueError("not a Gaussian rational: %r" % (s,))
    re_part = parse_rational(m.group("re").replace(" ", "")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if m.group("i"):
        if m.group("re") is not None and m.group("sign") is None:
            if m.group("im") is not None:
                raise ValueError("missing sign before imaginary part: %r" % (s,))
            # "r/s i": the regex bound the coefficient to the real slot
            return GaussRational(0, re_part)
        im_part = parse_rational(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("sign") == "-":
            im_part = -im_part
    return GaussRational(re_part, im_part)


def inv_sqrt(n: int) -> Fraction:
    """1/sqrt(n) when n is a perfect square, else ValueError."""
    if n <= 0:
        raise ValueError("1/sqrt(n) needs n > 0, got %d" % n)
    r = isqrt(n)
    if r * r != n:
        raise ValueError("1/sqrt(%d) is not rational" % n)
    return Fraction(1, r)
