"""Generating functions G_n(t) = sum_r A(n,r;3) t^(r-1).

Even orders come from the two g-sequences, odd orders from their even
neighbour through the factor 2(1+2t)(2+t) / (9(t+1)).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from asm3.core.asm_types import NonIntegerCoefficient, OutOfRange
from asm3.core.constants import FORMULA_WEIGHT
from asm3.core.upoly import UPoly, t_poly
from asm3.recurrences import ROUTE_RECURRENCE, a3_total, g_poly, multiplier_r

logger = logging.getLogger("asm3.genfun")

# 2(1+2t)(2+t), the odd/even connecting numerator
ODD_NUMERATOR = t_poly([4, 10, 4])
T_PLUS_ONE = t_poly([1, 1])


@dataclass(frozen=True)
class RefinedRow:
    """
    Refined weighted counts of order n: counts[r-1] = A(n, r; weight).
    """
    n: int
    counts: Tuple[int, ...]
    total: int
    weight: int = FORMULA_WEIGHT

    def __post_init__(self):
        assert len(self.counts) == self.n, f"order {self.n} row has {len(self.counts)} entries"
        assert sum(self.counts) == self.total, f"row {self.counts} does not sum to {self.total}"

    def is_palindromic(self) -> bool:
        return self.counts == self.counts[::-1]

    def count(self, r: int) -> int:
        if not 1 <= r <= self.n:
            raise OutOfRange(f"column {r} outside 1..{self.n}")
        return self.counts[r - 1]

    def as_poly(self) -> UPoly:
        return t_poly(self.counts)

    @staticmethod
    def from_poly(n: int, poly: UPoly, weight: int = FORMULA_WEIGHT) -> "RefinedRow":
        """
        @raise NonIntegerCoefficient: a coefficient is fractional or negative,
            or the degree does not fit order n
        """
        if poly.degree > n - 1:
            raise NonIntegerCoefficient(f"G_{n} has degree {poly.degree} > {n - 1}")
        counts = []
        for r in range(n):
            c = poly[r]
            if c.denominator != 1 or c < 0:
                raise NonIntegerCoefficient(f"A({n},{r + 1}) = {c} is not a nonnegative integer")
            counts.append(c.numerator)
        return RefinedRow(n, tuple(counts), sum(counts), weight)


@lru_cache(maxsize=None)
def g_even(nu: int) -> RefinedRow:
    """Row of order 2v+2 from the normalized even generating function"""
    bracket = g_poly(1, nu, ROUTE_RECURRENCE).scale(3 * nu + 2) \
              - g_poly(2, nu, ROUTE_RECURRENCE).scale(3 * nu + 1)
    normalized = bracket.exact_div(T_PLUS_ONE).scale(Fraction(factorial(2 * nu + 1), factorial(3 * nu + 2)))
    n = 2 * nu + 2
    row = RefinedRow.from_poly(n, normalized.scale(a3_total(n)))
    logger.debug(f"built even row n={n}")
    return row


@lru_cache(maxsize=None)
def g_odd(nu: int) -> RefinedRow:
    """Row of order 2v+1 from the even row of order 2v"""
    if nu == 0:
        return RefinedRow(1, (1,), 1)
    n = 2 * nu + 1
    even = g_even(nu - 1).as_poly()
    poly = (even * ODD_NUMERATOR).exact_div(T_PLUS_ONE.scale(9)).scale(Fraction(a3_total(n), a3_total(n - 1)))
    row = RefinedRow.from_poly(n, poly)
    logger.debug(f"built odd row n={n}")
    return row


def row(n: int) -> RefinedRow:
    if n < 1:
        raise OutOfRange(f"order must be positive, got {n}")
    if n % 2 == 0:
        return g_even((n - 2) // 2)
    return g_odd((n - 1) // 2)


def generating_function(n: int) -> UPoly:
    """G_n(t) with integer coefficients"""
    return row(n).as_poly()


def normalized(n: int) -> UPoly:
    """G_n(t) / A(n;3); coefficients sum to 1"""
    return generating_function(n).scale(Fraction(1, a3_total(n)))


def refined(n: int, r: int) -> int:
    """A(n,r;3)"""
    if n < 1:
        raise OutOfRange(f"order must be positive, got {n}")
    return row(n).count(r)


def g_even_from_odd(nu: int) -> RefinedRow:
    """Order 2v recovered from order 2v+1 by inverting the odd/even factor, v >= 1"""
    assert nu >= 1
    n = 2 * nu
    odd = row(n + 1).as_poly()
    poly = (odd * T_PLUS_ONE.scale(9)).exact_div(ODD_NUMERATOR).scale(Fraction(a3_total(n), a3_total(n + 1)))
    return RefinedRow.from_poly(n, poly)


def odd_from_multiplier(nu: int) -> RefinedRow:
    """G_{2v+1}(t) = -r_v 2(1+2t)(2+t) / (3(1+t)) G_{2v}(t), v >= 1"""
    assert nu >= 1
    poly = (row(2 * nu).as_poly() * ODD_NUMERATOR).exact_div(T_PLUS_ONE.scale(3)).scale(-multiplier_r(nu))
    return RefinedRow.from_poly(2 * nu + 1, poly)
