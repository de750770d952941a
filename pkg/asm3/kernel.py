"""The odd trigonometric polynomial f_n(u) = Z(u) sin^n(u) cos^(n-1)(u).

f_n is fixed up to scale by two conditions: its frequencies avoid multiples
of 3, and it vanishes to order n at u = 0 and to order n-1 at u = pi/2.
It is built here from the binomial closed forms and, independently, as the
null vector of the exact constraint system over the coefficients beta_k of
sin((4 - 3n + 6k)u).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from asm3.core.asm_types import (Constraint, KernelDimensionError, NonZeroRemainder, OutOfRange, Rat,
                                 ZeroDenominator)
from asm3.core.constants import AT_HALF_PI, AT_ZERO
from asm3.core.rational import Sqrt3Scalar, rat_binomial
from asm3.core.trig import OddTrigPoly, trig_eval_derivative_at, trig_mul_cos3, trig_to_w_poly
from asm3.genfun import ODD_NUMERATOR, T_PLUS_ONE, RefinedRow
from asm3.recurrences import multiplier_c, multiplier_r, substitute_w

logger = logging.getLogger("asm3.kernel")

THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class KernelProblem:
    n: int
    frequencies: Tuple[int, ...] = field(init=False)
    constraints: Tuple[Constraint, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange(f"order must be positive, got {self.n}")
        freqs = tuple(4 - 3 * self.n + 6 * k for k in range(self.n))
        assert all(m % 3 for m in freqs)
        cons = tuple((AT_ZERO, m) for m in range(self.n)) + tuple((AT_HALF_PI, m) for m in range(self.n - 1))
        object.__setattr__(self, "frequencies", freqs)
        object.__setattr__(self, "constraints", cons)

    def matrix(self) -> List[List[int]]:
        """M[(point, m)][k] = m-th derivative of sin(freq_k u) at the point"""
        rows = []
        for point, order in self.constraints:
            rows.append([int(trig_eval_derivative_at(OddTrigPoly.sine(m), order, point))
                         for m in self.frequencies])
        return rows

    def to_trig(self, beta: Sequence[Rat]) -> OddTrigPoly:
        return OddTrigPoly.from_pairs(zip(self.frequencies, beta))


def kernel_problem(n: int) -> KernelProblem:
    return KernelProblem(n)


def _even_sum(nu: int, j: int, offset: int) -> List[Tuple[int, Fraction]]:
    # sum_a C(v - j/3, a) C(v + j/3, v - a) sin((offset - 6v + 12a)u)
    third = j * THIRD
    return [(offset - 6 * nu + 12 * a, rat_binomial(nu - third, a) * rat_binomial(nu + third, nu - a))
            for a in range(nu + 1)]


def f_even_closed(nu: int) -> OddTrigPoly:
    """f_{2v+2}(u) / c_v"""
    pairs = [(m, (3 * nu + 2) * c) for m, c in _even_sum(nu, 1, 2)] \
            + [(m, -(3 * nu + 1) * c) for m, c in _even_sum(nu, 2, 4)]
    return OddTrigPoly.from_pairs(pairs)


def f_even_closed_alt(nu: int) -> OddTrigPoly:
    """
    The form with C(v + 1/3, a) C(v - 1/3, v - a) sin((-2 - 6v + 12a)u) leading;
    reindexing a -> v - a turns it into -f_even_closed(v).
    """
    pairs = [(-2 - 6 * nu + 12 * a, (3 * nu + 2) * rat_binomial(nu + THIRD, a) * rat_binomial(nu - THIRD, nu - a))
             for a in range(nu + 1)]
    pairs += [(m, (3 * nu + 1) * c) for m, c in _even_sum(nu, 2, 4)]
    return OddTrigPoly.from_pairs(pairs)


def f_odd_closed(nu: int) -> OddTrigPoly:
    """f_{2v+1}(u) up to scale, v >= 1"""
    if nu < 1:
        raise OutOfRange(f"odd closed form needs v >= 1, got {nu}")
    pairs = [(1 - 6 * nu + 12 * a, rat_binomial(nu - 2 * THIRD, a) * rat_binomial(nu - THIRD, nu - a))
             for a in range(nu + 1)]
    pairs += [(5 - 6 * nu + 12 * a, -rat_binomial(nu - THIRD, a) * rat_binomial(nu - 2 * THIRD, nu - a - 1))
              for a in range(nu)]
    return OddTrigPoly.from_pairs(pairs)


def f_closed(n: int) -> OddTrigPoly:
    if n < 2:
        raise OutOfRange(f"closed forms start at n = 2, got {n}")
    if n % 2 == 0:
        return f_even_closed((n - 2) // 2)
    return f_odd_closed((n - 1) // 2)


def kernel_beta(n: int) -> List[Rat]:
    """
    The null vector of the constraint system, scaled so its top frequency
    3n-2 carries the same coefficient as the closed form.
    @raise KernelDimensionError: the null space is not one-dimensional
    """
    if n < 2:
        raise OutOfRange(f"kernel problem needs n >= 2, got {n}")
    problem = kernel_problem(n)
    basis = sympy.Matrix(problem.matrix()).nullspace()
    logger.debug(f"n={n}: {len(problem.constraints)}x{n} system, null space dimension {len(basis)}")
    if len(basis) != 1:
        raise KernelDimensionError(f"n={n}: null space has dimension {len(basis)}, expected 1")
    raw = [Fraction(int(e.p), int(e.q)) for e in (sympy.Rational(x) for x in basis[0])]
    top = raw[-1]
    if top == 0:
        raise KernelDimensionError(f"n={n}: null vector has no component at frequency {3 * n - 2}")
    scale = f_closed(n).coefficient(3 * n - 2) / top
    return [scale * b for b in raw]


def beta_binomial_constants(nu: int) -> Optional[Tuple[Rat, Rat]]:
    """
    For n = 2v+2, the constants (c1, c2) with
    beta_{2a} = c1 C(v+1/3, a) C(v-1/3, v-a) and beta_{2a+1} = c2 C(v-2/3, a) C(v+2/3, v-a),
    or None if the null vector does not have this shape.
    """
    beta = kernel_beta(2 * nu + 2)
    even = [beta[2 * a] / (rat_binomial(nu + THIRD, a) * rat_binomial(nu - THIRD, nu - a)) for a in range(nu + 1)]
    odd = [beta[2 * a + 1] / (rat_binomial(nu - 2 * THIRD, a) * rat_binomial(nu + 2 * THIRD, nu - a))
           for a in range(nu + 1)]
    if len(set(even)) != 1 or len(set(odd)) != 1:
        return None
    return even[0], odd[0]


def f_solve_linear(n: int) -> OddTrigPoly:
    return kernel_problem(n).to_trig(kernel_beta(n))


def verify_shift_sum(f: OddTrigPoly) -> bool:
    """f(u) + f(u + 2pi/3) + f(u + 4pi/3) = 0 iff no frequency is divisible by 3"""
    return all(m % 3 for m in f.frequencies())


def verify_root_multiplicity(f: OddTrigPoly, n: int) -> bool:
    """sin^n(u) cos^(n-1)(u) divides f"""
    at_zero = all(trig_eval_derivative_at(f, m, AT_ZERO) == 0 for m in range(n))
    at_half_pi = all(trig_eval_derivative_at(f, m, AT_HALF_PI) == 0 for m in range(n - 1))
    return at_zero and at_half_pi


def ratio_identity(nu: int) -> Rat:
    """
    -[sum C(v+1/3, a) C(v-1/3, v-a) (6a-1-3v)^(2v+1)] / [sum C(v-2/3, a) C(v+2/3, v-a) (6a+2-3v)^(2v+1)],
    which equals (3v+1)/(3v+2)
    """
    e = 2 * nu + 1
    num = sum(rat_binomial(nu + THIRD, a) * rat_binomial(nu - THIRD, nu - a) * (6 * a - 1 - 3 * nu) ** e
              for a in range(nu + 1))
    den = sum(rat_binomial(nu - 2 * THIRD, a) * rat_binomial(nu + 2 * THIRD, nu - a) * (6 * a + 2 - 3 * nu) ** e
              for a in range(nu + 1))
    if den == 0:
        raise ZeroDenominator(f"ratio identity denominator vanished at v={nu}")
    return -Fraction(num) / den


def _even_row_from_f(nu: int) -> RefinedRow:
    n = 2 * nu + 2
    bracket = trig_to_w_poly(f_even_closed(nu), 2 * nu + 1)
    c_over_root3 = (multiplier_c(nu) / Sqrt3Scalar.sqrt3()).rational_value()
    poly = substitute_w(bracket, nu + 1).exact_div(T_PLUS_ONE).scale(Fraction(4, 3) ** (nu + 1) * c_over_root3)
    # the substitution yields sum_r A(n,r;3) t^(n-r)
    backward = RefinedRow.from_poly(n, poly)
    return RefinedRow(n, backward.counts[::-1], backward.total)


def reconstruct_row_from_f(n: int) -> RefinedRow:
    """
    A(n,r;3) recovered from f_n: for even n the closed form is divided by
    sin^(2v+1)(2u), re-expressed in t and scaled by c_v; for odd n the
    closed form is checked to be a multiple of cos 3u f_{n-1} and the row
    follows from the even one through r_v.
    """
    if n < 2:
        raise OutOfRange(f"reconstruction needs n >= 2, got {n}")
    if n % 2 == 0:
        return _even_row_from_f((n - 2) // 2)
    nu = (n - 1) // 2
    if f_odd_closed(nu).ratio_to(trig_mul_cos3(f_even_closed(nu - 1))) is None:
        raise NonZeroRemainder(f"f_{n} is not a multiple of cos 3u f_{n - 1}")
    even = _even_row_from_f(nu - 1).as_poly()
    poly = (even * ODD_NUMERATOR).exact_div(T_PLUS_ONE.scale(3)).scale(-multiplier_r(nu))
    return RefinedRow.from_poly(n, poly)
