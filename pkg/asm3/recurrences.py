"""Polynomial sequences Phi^(j)_v(w), F^(j)_v(u), g^(j)_v(t), the totals A(n;3),
their special-point closed forms and the multipliers c_v, r_v.
"""
import logging
import threading
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List

from asm3.core.asm_types import NonZeroRemainder, Rat
from asm3.core.constants import POINT_HALF, POINT_ONE, VAR_T, VAR_W
from asm3.core.rational import Sqrt3Scalar, rat_binomial
from asm3.core.trig import OddTrigPoly, trig_mul_cos, trig_mul_sin_squared
from asm3.core.upoly import UPoly, t_poly, w_poly

logger = logging.getLogger("asm3.recurrences")

ROUTE_RECURRENCE = "recurrence"
ROUTE_SUBSTITUTION = "substitution"
ROUTES = (ROUTE_RECURRENCE, ROUTE_SUBSTITUTION)

# Index j of the two sequences
SEQUENCES = (1, 2)

StepFn = Callable[[int, int, UPoly, UPoly], UPoly]


class RecurrenceCache(object):
    """
    Memoized three-term recurrence per sequence j. Entries 0 and 1 are the
    initial data; entry v+1 is produced from v and v-1 by `step`. Readers
    only ever see completed entries.
    """

    def __init__(self, initial: Dict[int, List[UPoly]], step: StepFn, name: str):
        self._entries = {j: list(polys) for j, polys in initial.items()}
        self._step = step
        self._lock = threading.Lock()
        self.name = name

    def get(self, j: int, nu: int) -> UPoly:
        if j not in self._entries:
            raise ValueError(f"{self.name}: sequence index must be 1 or 2, got {j}")
        assert nu >= 0, f"{self.name}: index must be nonnegative, got {nu}"
        entries = self._entries[j]
        if nu < len(entries):
            return entries[nu]
        with self._lock:
            while len(entries) <= nu:
                k = len(entries) - 1
                entries.append(self._step(j, k, entries[k], entries[k - 1]))
            logger.debug(f"{self.name}^({j}) extended to index {len(entries) - 1}")
        return entries[nu]


def _phi_step(j: int, nu: int, cur: UPoly, prev: UPoly) -> UPoly:
    # 9v(v+1)(1-w^2) Phi_{v+1} = -18v(2v+1) w(3-4w^2) Phi_v + 4(9v^2-j^2)(1-4w^2)^2 Phi_{v-1}
    rhs = (w_poly([0, 3, 0, -4]) * cur).scale(-18 * nu * (2 * nu + 1)) \
          + (w_poly([1, 0, -4]) ** 2 * prev).scale(4 * (9 * nu * nu - j * j))
    return rhs.exact_div(w_poly([1, 0, -1]).scale(9 * nu * (nu + 1)))


class PhiCache(RecurrenceCache):
    def __init__(self):
        RecurrenceCache.__init__(self,
                                 initial={
                                     1: [w_poly([1]), w_poly([0, Fraction(-16, 3)])],
                                     2: [w_poly([0, 2]), w_poly([Fraction(-4, 3), 0, Fraction(-16, 3)])],
                                 },
                                 step=_phi_step,
                                 name="Phi")


_P = t_poly([2, 5, 2])  # (1+2t)(2+t)
_Q = t_poly([1, 4, 1])  # 1+4t+t^2
_S = t_poly([1, 1, 1])  # 1+t+t^2
_G_MIDDLE = _Q * ((_S ** 2).scale(3) - _Q ** 2)
_G_LOWER = t_poly([0, 0, 1]) * _P ** 2
_G_LEAD = (t_poly([1, 0, -1]) ** 2).scale(3)


def _g_step(j: int, nu: int, cur: UPoly, prev: UPoly) -> UPoly:
    # 3(1-t^2)^2 g_{v+1} = (2v+1) Q [3 S^2 - Q^2] g_v + (9v^2-j^2) t^2 P^2 g_{v-1}
    rhs = (_G_MIDDLE * cur).scale(2 * nu + 1) + (_G_LOWER * prev).scale(9 * nu * nu - j * j)
    return rhs.exact_div(_G_LEAD)


class GCache(RecurrenceCache):
    def __init__(self):
        nine_t2 = t_poly([0, 0, 9])
        RecurrenceCache.__init__(self,
                                 initial={
                                     1: [_S.scale(Fraction(1, 3)), (_P ** 2 - nine_t2).scale(Fraction(1, 18))],
                                     2: [_Q.scale(Fraction(-1, 3)), (_P ** 2 + nine_t2).scale(Fraction(-1, 18))],
                                 },
                                 step=_g_step,
                                 name="g")


_phi_cache = PhiCache()
_g_cache = GCache()


def phi(j: int, nu: int) -> UPoly:
    """Phi^(j)_v(w), the quotient F^(j)_v(u) / sin^(2v+1)(2u) in w = cos 2u"""
    return _phi_cache.get(j, nu)


def f_trig_direct(j: int, nu: int) -> OddTrigPoly:
    """
    F^(j)_v(u) = sum_a C(v - j/3, a) C(v + j/3, v - a) sin 2(j - 3v + 6a)u
    """
    if j not in SEQUENCES:
        raise ValueError(f"sequence index must be 1 or 2, got {j}")
    third = Fraction(j, 3)
    return OddTrigPoly.from_pairs(
        (2 * (j - 3 * nu + 6 * a), rat_binomial(nu - third, a) * rat_binomial(nu + third, nu - a))
        for a in range(nu + 1))


def verify_f_recurrence(j: int, nu: int) -> bool:
    """
    9v(v+1) F_{v+1} - 18v(2v+1) cos 6u F_v - 4(9v^2 - j^2) sin^2 6u F_{v-1} = 0
    checked in frequency space, v >= 1
    """
    assert nu >= 1
    lhs = f_trig_direct(j, nu + 1).scale(9 * nu * (nu + 1)) \
        - trig_mul_cos(f_trig_direct(j, nu), 6).scale(18 * nu * (2 * nu + 1)) \
        - trig_mul_sin_squared(f_trig_direct(j, nu - 1), 6).scale(4 * (9 * nu * nu - j * j))
    return lhs.is_zero()


def substitute_w(p: UPoly, power: int) -> UPoly:
    """
    (t^2+t+1)^power * p(w) at w = -(t^2+4t+1) / (2(t^2+t+1)), as a polynomial in t.
    Each w^k becomes N^k D^(deg-k) over D^deg with N = -(t^2+4t+1), D = 2(t^2+t+1).
    @raise NonZeroRemainder: the result is not a polynomial
    """
    if p.is_zero():
        return t_poly([])
    d = p.degree
    num = -_Q
    den = _S.scale(2)
    num_powers = [t_poly([1])]
    den_powers = [t_poly([1])]
    for _ in range(d):
        num_powers.append(num_powers[-1] * num)
        den_powers.append(den_powers[-1] * den)
    hom = t_poly([])
    for k, c in enumerate(p.coefficients):
        if c:
            hom = hom + (num_powers[k] * den_powers[d - k]).scale(c)
    if power >= d:
        hom = hom * den ** (power - d)
    else:
        hom = hom.exact_div(den ** (d - power))
    return hom.scale(Fraction(1, 2 ** power))


def g_poly(j: int, nu: int, route: str = ROUTE_RECURRENCE) -> UPoly:
    """
    g^(j)_v(t) either from its own second order recurrence or from
    v! (t^2+t+1)^(v+1) Phi^(j)_v(w(t)) / (3 4^v)
    """
    if route == ROUTE_RECURRENCE:
        return _g_cache.get(j, nu)
    elif route == ROUTE_SUBSTITUTION:
        return substitute_w(phi(j, nu), nu + 1).scale(Fraction(factorial(nu), 3 * 4 ** nu))
    raise ValueError(f"unknown route {route!r}, expected one of {ROUTES}")


def total_ratio(n: int) -> Rat:
    """A(n;3) / A(n-1;3) for n >= 2"""
    assert n >= 2, f"ratio defined from n = 2, got {n}"
    nu = (n - 2) // 2
    if n % 2 == 0:
        return Fraction(3 ** nu * factorial(nu) * factorial(3 * nu + 2), factorial(2 * nu + 1) ** 2)
    nu = (n - 1) // 2
    return Fraction(3 ** nu * factorial(nu) * factorial(3 * nu), factorial(2 * nu) ** 2)


class TotalsTable(object):
    """A(n;3) for n = 1..n_max, grown by chaining ratios from A(1;3) = 1"""

    def __init__(self):
        self._totals = [1]
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        assert n >= 1, f"order must be positive, got {n}"
        if n <= len(self._totals):
            return self._totals[n - 1]
        with self._lock:
            while len(self._totals) < n:
                m = len(self._totals) + 1
                value = self._totals[-1] * total_ratio(m)
                if value.denominator != 1:
                    raise NonZeroRemainder(f"A({m};3) = {value} is not an integer")
                self._totals.append(value.numerator)
        return self._totals[n - 1]


_totals = TotalsTable()


def a3_total(n: int) -> int:
    """A(n;3), the 3-enumeration of all n x n ASMs"""
    return _totals.get(n)


def phi_special(j: int, nu: int, point: Fraction) -> Rat:
    """
    Closed forms of Phi^(j)_v at w = -1/2 (t = 0) and w = -1 (t = 1)
    """
    if j not in SEQUENCES:
        raise ValueError(f"sequence index must be 1 or 2, got {j}")
    scale = Fraction(4, 3) ** nu
    if point == POINT_HALF:
        return (-1) ** (j + 1) * scale * Fraction(factorial(2 * nu), factorial(nu) ** 2)
    if point == POINT_ONE:
        denom = factorial(nu) * factorial(2 * nu + 1)
        if j == 1:
            return scale * Fraction(factorial(3 * nu + 1), denom)
        return -scale * Fraction((3 * nu + 2) * factorial(3 * nu), denom)
    raise ValueError(f"no closed form at w = {point}")


def multiplier_c(nu: int) -> Sqrt3Scalar:
    """
    c_v solved from A(2v+2;3) = (16/3)^v 4 c_v (3v+2)! / (sqrt3 v! (2v+1)!)
    """
    root3_part = Fraction(a3_total(2 * nu + 2) * factorial(nu) * factorial(2 * nu + 1),
                          4 * factorial(3 * nu + 2)) * Fraction(3, 16) ** nu
    return Sqrt3Scalar(0, root3_part)


def multiplier_c_from_half_point(nu: int) -> Sqrt3Scalar:
    """
    c_v solved from the t = 0 relation A(2v+1;3) = (4/3)^(2v+1) c_v sqrt3 (2v+1)! / (v!)^2
    """
    c_root3 = a3_total(2 * nu + 1) * Fraction(3, 4) ** (2 * nu + 1) \
              * Fraction(factorial(nu) ** 2, factorial(2 * nu + 1))
    return Sqrt3Scalar(c_root3) / Sqrt3Scalar.sqrt3()


def multiplier_r(nu: int) -> Rat:
    """r_v = -A(2v+1;3) / (3 A(2v;3)), v >= 1"""
    assert nu >= 1, f"r_v is defined for v >= 1, got {nu}"
    return Fraction(-a3_total(2 * nu + 1), 3 * a3_total(2 * nu))


def total_from_odd_multiplier(nu: int) -> int:
    """A(2v;3) = -(4/3) r_v A(2v-1;3)"""
    value = Fraction(-4, 3) * multiplier_r(nu) * a3_total(2 * nu - 1)
    if value.denominator != 1:
        raise NonZeroRemainder(f"A({2 * nu};3) from r_{nu} is {value}")
    return value.numerator
