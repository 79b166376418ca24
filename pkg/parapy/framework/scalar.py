"""Exact arithmetic in Q(i)[sqrt(2)].

Every matrix element produced by the parabose operators in the A-basis is of the form
(a + b i) + (c + d i) sqrt(2) with rational a, b, c, d. Rationals are sympy's ``QQ`` domain
elements (gmpy2 ``mpq`` when available, ``PythonMPQ`` otherwise); they are always reduced.
"""
from __future__ import annotations

from typing import Tuple, Union

from sympy import QQ

Rational = QQ.dtype
ScalarLike = Union["Scalar", int, Rational]

_ZERO_Q = QQ(0)
_TWO_Q = QQ(2)


def rational(numerator: int, denominator: int = 1) -> Rational:
    return QQ(numerator, denominator)


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if "/" in text:
        numerator, denominator = text.split("/", 1)
        if int(denominator) <= 0:
            raise ValueError(f"[Scalar] Denominator must be positive in '{text}'")
        return QQ(int(numerator), int(denominator))
    return QQ(int(text))


def format_rational(value: Rational) -> str:
    return f"{int(value.numerator)}/{int(value.denominator)}"


def _as_rational(value) -> Rational:
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return QQ(value)
    # Fractions, sympy Rationals and friends all expose numerator/denominator
    return QQ(int(value.numerator), int(value.denominator))


class Scalar:
    """Immutable value (re + im i) + (re_s2 + im_s2 i) sqrt(2)."""
    __slots__ = ("re", "im", "re_s2", "im_s2")

    def __init__(self, re=0, im=0, re_s2=0, im_s2=0) -> None:
        self.re = _as_rational(re)
        self.im = _as_rational(im)
        self.re_s2 = _as_rational(re_s2)
        self.im_s2 = _as_rational(im_s2)

    @classmethod
    def _make(cls, re: Rational, im: Rational, re_s2: Rational, im_s2: Rational) -> Scalar:
        scalar = object.__new__(cls)
        scalar.re = re
        scalar.im = im
        scalar.re_s2 = re_s2
        scalar.im_s2 = im_s2
        return scalar

    @staticmethod
    def coerce(value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            return value
        return Scalar._make(_as_rational(value), _ZERO_Q, _ZERO_Q, _ZERO_Q)

    @property
    def components(self) -> Tuple[Rational, Rational, Rational, Rational]:
        return self.re, self.im, self.re_s2, self.im_s2

    def is_zero(self) -> bool:
        return not (self.re or self.im or self.re_s2 or self.im_s2)

    def is_rational(self) -> bool:
        return not (self.im or self.re_s2 or self.im_s2)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational)):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im and self.re_s2 == other.re_s2 \
            and self.im_s2 == other.im_s2

    def __hash__(self) -> int:
        return hash(self.components)

    def __neg__(self) -> Scalar:
        return Scalar._make(-self.re, -self.im, -self.re_s2, -self.im_s2)

    def __add__(self, other: ScalarLike) -> Scalar:
        other = Scalar.coerce(other)
        return Scalar._make(self.re + other.re, self.im + other.im, self.re_s2 + other.re_s2,
                            self.im_s2 + other.im_s2)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        other = Scalar.coerce(other)
        return Scalar._make(self.re - other.re, self.im - other.im, self.re_s2 - other.re_s2,
                            self.im_s2 - other.im_s2)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        if not isinstance(other, Scalar):
            factor = _as_rational(other)
            return Scalar._make(self.re * factor, self.im * factor, self.re_s2 * factor, self.im_s2 * factor)
        a0, a1, a2, a3 = self.re, self.im, self.re_s2, self.im_s2
        b0, b1, b2, b3 = other.re, other.im, other.re_s2, other.im_s2
        # (x + y sqrt2)(u + v sqrt2) = (xu + 2yv) + (xv + yu) sqrt2 over Q(i)
        re = a0 * b0 - a1 * b1 + _TWO_Q * (a2 * b2 - a3 * b3)
        im = a0 * b1 + a1 * b0 + _TWO_Q * (a2 * b3 + a3 * b2)
        re_s2 = a0 * b2 - a1 * b3 + a2 * b0 - a3 * b1
        im_s2 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        return Scalar._make(re, im, re_s2, im_s2)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("[Scalar] Cannot invert zero")
        x0, x1, y0, y1 = self.re, self.im, self.re_s2, self.im_s2
        # norm N = x^2 - 2 y^2 lies in Q(i) and is nonzero since sqrt2 is not in Q(i)
        n0 = x0 * x0 - x1 * x1 - _TWO_Q * (y0 * y0 - y1 * y1)
        n1 = _TWO_Q * x0 * x1 - _TWO_Q * _TWO_Q * y0 * y1
        modulus = n0 * n0 + n1 * n1
        inv0, inv1 = n0 / modulus, -n1 / modulus
        # (x - y sqrt2) / N
        return Scalar._make(x0, x1, -y0, -y1) * Scalar._make(inv0, inv1, _ZERO_Q, _ZERO_Q)

    def __truediv__(self, other: ScalarLike) -> Scalar:
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def conjugate(self) -> Scalar:
        return Scalar._make(self.re, -self.im, self.re_s2, -self.im_s2)

    def to_strings(self) -> Tuple[str, str, str, str]:
        return tuple(format_rational(component) for component in self.components)

    @staticmethod
    def from_strings(re: str, im: str, re_s2: str, im_s2: str) -> Scalar:
        return Scalar._make(parse_rational(re), parse_rational(im), parse_rational(re_s2), parse_rational(im_s2))

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        parts = []
        for value, unit in zip(self.components, ("", "i", "√2", "i√2")):
            if not value:
                continue
            text = str(value)
            if unit and text in ("1", "-1"):
                text = text[:-1]
            parts.append(f"{text}{unit}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Scalar()
ONE = Scalar(1)
I = Scalar(0, 1)
SQRT2 = Scalar(0, 0, 1)
HALF = Scalar(QQ(1, 2))
INV_SQRT2 = Scalar(0, 0, QQ(1, 2))


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    return a.inverse()


def scalar_conj(a: Scalar) -> Scalar:
    return a.conjugate()
