"""Exact scalars: rationals and Gaussian rationals.

Every certificate produced by this package rests on arithmetic in Q or
Q(i); no floating point is allowed anywhere near a rank decision.  A
Scalar is a pair of ``fractions.Fraction`` values (real and imaginary
part), so canonical lowest terms come for free.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

FIELD_Q = "Q"
FIELD_QI = "Qi"

RationalLike = Union[int, Fraction, "Scalar"]


class Scalar:
    """An exact element of Q or Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(value: RationalLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        raise TypeError(f"cannot interpret {value!r} as an exact scalar")

    @property
    def field_tag(self) -> str:
        return FIELD_Q if self.im == 0 else FIELD_QI

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __add__(self, other: RationalLike) -> "Scalar":
        other = Scalar.coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: RationalLike) -> "Scalar":
        other = Scalar.coerce(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: RationalLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: RationalLike) -> "Scalar":
        other = Scalar.coerce(other)
        if self.im == 0 and other.im == 0:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "Scalar":
        other = Scalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        if other.im == 0:
            return Scalar(self.re / other.re, self.im / other.re)
        norm = other.re * other.re + other.im * other.im
        return self * Scalar(other.re / norm, -other.im / norm)

    def __rtruediv__(self, other: RationalLike) -> "Scalar":
        return Scalar.coerce(other) / self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return Scalar(1) / self ** (-exponent)
        out = Scalar(1)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __float__(self) -> float:
        if self.im != 0:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return float(self.re)

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def format_scalar(s: Scalar, spaced: bool = False) -> str:
    """Canonical text form: ``p/q``, ``a+b i`` or ``b i``; lowest terms."""
    gap = " " if spaced else ""
    if s.im == 0:
        return str(s.re)
    imag = f"{s.im}{gap}i"
    if s.re == 0:
        return imag
    if s.im > 0:
        return f"{s.re}+{imag}"
    return f"{s.re}-{-s.im}{gap}i"


def rationalize(x: float, max_denominator: int = 64) -> Fraction:
    """Nearest fraction with bounded denominator (continued-fraction convergents)."""
    return Fraction(x).limit_denominator(max_denominator)
