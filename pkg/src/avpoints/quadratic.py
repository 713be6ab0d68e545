"""Exact arithmetic in real quadratic rings Q(sqrt(d)).

A QuadraticValue is a + b*sqrt(d) with a, b rational and d a positive
non-square integer; rationals are the degenerate case b = 0 (stored with
d = 0).  Signs and comparisons are decided exactly by comparing a**2
against b**2 * d, so these values can serve as interval endpoints for
root counting without any floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .arith import is_square


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class QuadraticValue:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        a = _as_fraction(a)
        b = _as_fraction(b)
        if b != 0:
            if d <= 0:
                raise ValueError("radicand must be positive")
            if is_square(d):
                a += b * isqrt(d)
                b = Fraction(0)
                d = 0
        else:
            d = 0
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def rational(cls, x) -> "QuadraticValue":
        return cls(x)

    @classmethod
    def sqrt(cls, d: int, scale=1) -> "QuadraticValue":
        """scale * sqrt(d)."""
        return cls(0, scale, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other) -> "QuadraticValue":
        if isinstance(other, QuadraticValue):
            if self.b != 0 and other.b != 0 and self.d != other.d:
                raise ValueError("incompatible radicands")
            return other
        return QuadraticValue(other)

    def _radicand(self, other: "QuadraticValue") -> int:
        return self.d or other.d

    def __add__(self, other):
        other = self._coerce(other)
        return QuadraticValue(self.a + other.a, self.b + other.b, self._radicand(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        d = self._radicand(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return QuadraticValue(a, b, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticValue":
        return QuadraticValue(self.a, -self.b, self.d)

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Mixed signs: |a| vs |b| sqrt(d) decides.
        lhs = a * a
        rhs = b * b * self.d
        if lhs == rhs:
            return 0
        bigger_rational = lhs > rhs
        return (1 if bigger_rational else -1) if a > 0 else (-1 if bigger_rational else 1)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        try:
            return (self - other).is_zero()
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def floor(self) -> int:
        if self.b == 0:
            return self.a.numerator // self.a.denominator
        # self = (A + B*sqrt(d)) / D with B*sqrt(d) irrational, so
        # floor(self) = (A + floor(B*sqrt(d))) // D.
        qa, qb = self.a.denominator, self.b.denominator
        D = qa * qb
        A = self.a.numerator * qb
        B = self.b.numerator * qa
        s = isqrt(B * B * self.d)
        fl = s if B > 0 else -s - 1
        return (A + fl) // D

    def ceil(self) -> int:
        return -(-self).floor()

    def __repr__(self):
        if self.b == 0:
            return f"QuadraticValue({self.a})"
        return f"QuadraticValue({self.a} + {self.b}*sqrt({self.d}))"
