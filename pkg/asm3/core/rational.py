"""Exact scalars: generalized binomials and the field Q(sqrt 3).

All values are immutable; Fraction keeps itself reduced with a positive
denominator, so equality is structural.
"""
from fractions import Fraction
from math import factorial
from typing import Union

from asm3.core.asm_types import IrrationalValue, Rat

Scalar = Union[int, Fraction]


def as_rat(x: Scalar) -> Rat:
    return x if isinstance(x, Fraction) else Fraction(x)


def rat_binomial(x: Scalar, k: int) -> Rat:
    """
    Generalized binomial coefficient x (x - 1) ... (x - k + 1) / k!
    @param x: any rational
    @param k: nonnegative integer
    @return: exact value; 1 for k = 0
    """
    assert k >= 0, f"binomial order must be nonnegative, got {k}"
    x = as_rat(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / factorial(k)


def rat_to_str(x: Scalar) -> str:
    """'p/q' for proper fractions, plain decimal for integers."""
    x = as_rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Sqrt3Scalar(object):
    """a + b sqrt(3) with a, b rational."""

    __slots__ = ("rational_part", "root3_part")

    def __init__(self, rational_part: Scalar = 0, root3_part: Scalar = 0):
        object.__setattr__(self, "rational_part", as_rat(rational_part))
        object.__setattr__(self, "root3_part", as_rat(root3_part))

    def __setattr__(self, key, value):
        raise AttributeError("Sqrt3Scalar is immutable")

    @staticmethod
    def sqrt3() -> "Sqrt3Scalar":
        return Sqrt3Scalar(0, 1)

    @staticmethod
    def _coerce(other) -> "Sqrt3Scalar":
        if isinstance(other, Sqrt3Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Sqrt3Scalar(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Sqrt3Scalar(self.rational_part + other.rational_part, self.root3_part + other.root3_part)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt3Scalar(-self.rational_part, -self.root3_part)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.rational_part, self.root3_part
        c, d = other.rational_part, other.root3_part
        return Sqrt3Scalar(a * c + 3 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "Sqrt3Scalar":
        return Sqrt3Scalar(self.rational_part, -self.root3_part)

    def norm(self) -> Rat:
        """(a + b sqrt 3)(a - b sqrt 3) = a^2 - 3 b^2"""
        return self.rational_part ** 2 - 3 * self.root3_part ** 2

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        num = self * other.conjugate()
        return Sqrt3Scalar(num.rational_part / norm, num.root3_part / norm)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def is_zero(self) -> bool:
        return self.rational_part == 0 and self.root3_part == 0

    def rational_value(self) -> Rat:
        if self.root3_part != 0:
            raise IrrationalValue(f"{self!r} has a nonzero sqrt(3) part")
        return self.rational_part

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.rational_part == other.rational_part and self.root3_part == other.root3_part

    def __hash__(self):
        return hash((self.rational_part, self.root3_part))

    def __repr__(self):
        return f"Sqrt3Scalar({rat_to_str(self.rational_part)}, {rat_to_str(self.root3_part)})"
