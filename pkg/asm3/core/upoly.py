"""Dense univariate polynomials over the rationals.

A polynomial is a tuple of coefficients, index = degree, e.g.
(1, 10, 5) is 1 + 10x + 5x^2. Trailing zeros are always stripped, so the
zero polynomial is the empty tuple and two equal polynomials compare equal
structurally.
"""
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from asm3.core.asm_types import NonZeroRemainder, Rat
from asm3.core.constants import VAR_T, VAR_W
from asm3.core.rational import Scalar, as_rat, rat_to_str

# Degree of the zero polynomial
MINUS_INFINITY = float("-inf")


def _normalize(coefficients: Iterable[Scalar]) -> Tuple[Rat, ...]:
    coefficients = [as_rat(c) for c in coefficients]
    n = len(coefficients)
    while n and coefficients[n - 1] == 0:
        n -= 1
    return tuple(coefficients[:n])


class UPoly(object):
    __slots__ = ("coefficients", "var")

    def __init__(self, coefficients: Iterable[Scalar] = (), var: str = VAR_W):
        object.__setattr__(self, "coefficients", _normalize(coefficients))
        object.__setattr__(self, "var", var)

    def __setattr__(self, key, value):
        raise AttributeError("UPoly is immutable")

    @staticmethod
    def constant(c: Scalar, var: str = VAR_W) -> "UPoly":
        return UPoly([c], var)

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coefficients) - 1 if self.coefficients else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coefficients

    def leading(self) -> Rat:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __getitem__(self, power: int) -> Rat:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __len__(self):
        return len(self.coefficients)

    def _lift(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return UPoly(res, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coefficients], self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return UPoly((), self.var)
        res = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                res[i + j] += x * y
        return UPoly(res, self.var)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "UPoly":
        c = as_rat(c)
        return UPoly([c * x for x in self.coefficients], self.var)

    def __pow__(self, k: int) -> "UPoly":
        assert k >= 0, "only nonnegative powers"
        result = UPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "UPoly") -> Tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        db = len(other.coefficients) - 1
        lead = other.leading()
        if len(rem) - 1 < db:
            return UPoly((), self.var), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lead
            quot[k] = q
            if q == 0:
                continue
            for i, c in enumerate(other.coefficients):
                rem[k + i] -= q * c
        return UPoly(quot, self.var), UPoly(rem[:db], self.var)

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NonZeroRemainder(f"({self}) / ({other}) leaves remainder {r}")
        return q

    def evaluate(self, x: Scalar) -> Rat:
        x = as_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly.constant(other, self.var)
        if not isinstance(other, UPoly):
            return False
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"UPoly({[rat_to_str(c) for c in self.coefficients]}, var={self.var!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(rat_to_str(c))
            elif k == 1:
                terms.append(f"{rat_to_str(c)}*{self.var}")
            else:
                terms.append(f"{rat_to_str(c)}*{self.var}^{k}")
        return " + ".join(terms)


def poly_exact_div(a: UPoly, b: UPoly) -> UPoly:
    """
    Quotient q with a = q * b exactly
    @raise NonZeroRemainder: the division leaves a remainder
    """
    return a.exact_div(b)


def t_poly(coefficients: Sequence[Scalar]) -> UPoly:
    return UPoly(coefficients, VAR_T)


def w_poly(coefficients: Sequence[Scalar]) -> UPoly:
    return UPoly(coefficients, VAR_W)
