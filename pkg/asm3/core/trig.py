"""Odd trigonometric polynomials sum_m b_m sin(mu), m >= 1, over the rationals.

Products with cosines are done termwise by product-to-sum; every sine that
lands on a negative frequency is folded back through sin(-x) = -sin(x) in
`fold_frequencies`, and frequency 0 drops out.
"""
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from asm3.core.asm_types import Frequencies, Rat
from asm3.core.constants import AT_HALF_PI, AT_ZERO, VAR_W
from asm3.core.rational import Scalar, as_rat, rat_to_str
from asm3.core.upoly import UPoly

# sin(k pi / 2) for k mod 4
_QUARTER_SINES = (0, 1, 0, -1)


def fold_frequencies(pairs: Iterable[Tuple[int, Scalar]]) -> Frequencies:
    terms: Dict[int, Fraction] = {}
    for m, c in pairs:
        c = as_rat(c)
        if m == 0 or c == 0:
            continue
        if m < 0:
            m, c = -m, -c
        terms[m] = terms.get(m, Fraction(0)) + c
    return {m: c for m, c in terms.items() if c != 0}


class OddTrigPoly(object):
    __slots__ = ("_items",)

    def __init__(self, terms: Mapping[int, Scalar] = None):
        terms = terms or {}
        for m in terms:
            if m < 1:
                raise ValueError(f"frequencies must be positive, got {m}")
        items = tuple(sorted((m, as_rat(c)) for m, c in terms.items() if c != 0))
        object.__setattr__(self, "_items", items)

    def __setattr__(self, key, value):
        raise AttributeError("OddTrigPoly is immutable")

    @staticmethod
    def from_pairs(pairs: Iterable[Tuple[int, Scalar]]) -> "OddTrigPoly":
        """Build from (signed frequency, coefficient) pairs, folding negatives"""
        return OddTrigPoly(fold_frequencies(pairs))

    @staticmethod
    def sine(m: int, coeff: Scalar = 1) -> "OddTrigPoly":
        return OddTrigPoly.from_pairs([(m, coeff)])

    @property
    def terms(self) -> Frequencies:
        return dict(self._items)

    def items(self) -> Iterator[Tuple[int, Rat]]:
        return iter(self._items)

    def frequencies(self) -> List[int]:
        return [m for m, _ in self._items]

    def coefficient(self, m: int) -> Rat:
        return self.terms.get(m, Fraction(0))

    @property
    def max_frequency(self) -> int:
        return self._items[-1][0] if self._items else 0

    def is_zero(self) -> bool:
        return not self._items

    def __add__(self, other: "OddTrigPoly") -> "OddTrigPoly":
        return OddTrigPoly.from_pairs(list(self._items) + list(other._items))

    def __neg__(self) -> "OddTrigPoly":
        return OddTrigPoly({m: -c for m, c in self._items})

    def __sub__(self, other: "OddTrigPoly") -> "OddTrigPoly":
        return self + (-other)

    def scale(self, c: Scalar) -> "OddTrigPoly":
        c = as_rat(c)
        return OddTrigPoly({m: c * b for m, b in self._items})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def ratio_to(self, other: "OddTrigPoly") -> Optional[Rat]:
        """lambda with self = lambda * other, or None if not proportional"""
        if other.is_zero():
            return None if not self.is_zero() else Fraction(0)
        if self.frequencies() != other.frequencies():
            return None
        lam = self._items[0][1] / other._items[0][1]
        if all(a == lam * b for (_, a), (_, b) in zip(self._items, other._items)):
            return lam
        return None

    def __eq__(self, other):
        return isinstance(other, OddTrigPoly) and self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        body = ", ".join(f"{m}: {rat_to_str(c)}" for m, c in self._items)
        return f"OddTrigPoly({{{body}}})"


def trig_mul_cos(f: OddTrigPoly, k: int) -> OddTrigPoly:
    """cos(ku) f(u) via sin(mu) cos(ku) = [sin((m+k)u) + sin((m-k)u)] / 2"""
    half = Fraction(1, 2)
    pairs = []
    for m, c in f.items():
        pairs.append((m + k, half * c))
        pairs.append((m - k, half * c))
    return OddTrigPoly.from_pairs(pairs)


def trig_mul_cos3(f: OddTrigPoly) -> OddTrigPoly:
    return trig_mul_cos(f, 3)


def trig_mul_sin_squared(f: OddTrigPoly, k: int) -> OddTrigPoly:
    """sin^2(ku) f(u) = f/2 - cos(2ku) f / 2"""
    return f.scale(Fraction(1, 2)) - trig_mul_cos(f, 2 * k).scale(Fraction(1, 2))


_chebyshev_u: List[UPoly] = [UPoly.constant(1, VAR_W), UPoly([0, 2], VAR_W)]


def chebyshev_u(k: int) -> UPoly:
    """U_k(w) with sin((k+1)x) = sin(x) U_k(cos x)"""
    two_w = UPoly([0, 2], VAR_W)
    while len(_chebyshev_u) <= k:
        _chebyshev_u.append(two_w * _chebyshev_u[-1] - _chebyshev_u[-2])
    return _chebyshev_u[k]


def _sine_stack(sine_power: int) -> UPoly:
    assert sine_power >= 1 and sine_power % 2 == 1, f"sine power must be odd positive, got {sine_power}"
    # sin^(2v+1)(2u) = sin(2u) (1 - w^2)^v
    return UPoly([1, 0, -1], VAR_W) ** ((sine_power - 1) // 2)


def trig_from_w_poly(p: UPoly, sine_power: int) -> OddTrigPoly:
    """
    Expand sin^(sine_power)(2u) p(cos 2u) into frequency form
    @param p: polynomial in w = cos 2u
    @param sine_power: odd positive integer 2v+1
    """
    q = p * _sine_stack(sine_power)
    sin2u = OddTrigPoly.sine(2)
    acc = OddTrigPoly()
    for c in reversed(q.coefficients):
        acc = trig_mul_cos(acc, 2) + sin2u.scale(c)
    return acc


def trig_to_w_poly(f: OddTrigPoly, sine_power: int) -> UPoly:
    """
    Inverse of trig_from_w_poly: p with f(u) = sin^(sine_power)(2u) p(cos 2u)
    @raise ValueError: f has an odd frequency
    @raise NonZeroRemainder: sin^(sine_power)(2u) does not divide f
    """
    acc = UPoly((), VAR_W)
    for m, c in f.items():
        if m % 2:
            raise ValueError(f"frequency {m} is odd; f is not a polynomial in cos 2u times sin 2u")
        acc = acc + chebyshev_u(m // 2 - 1).scale(c)
    return acc.exact_div(_sine_stack(sine_power))


def trig_eval_derivative_at(f: OddTrigPoly, order: int, point: str) -> Rat:
    """
    Exact value of the order-th derivative of f at u = 0 or u = pi/2.
    d^k/du^k sin(mu) = m^k sin(mu + k pi/2)
    """
    assert order >= 0
    total = Fraction(0)
    for m, c in f.items():
        if point == AT_ZERO:
            s = _QUARTER_SINES[order % 4]
        elif point == AT_HALF_PI:
            s = _QUARTER_SINES[(m + order) % 4]
        else:
            raise ValueError(f"unsupported evaluation point {point!r}")
        if s:
            total += s * c * m ** order
    return total
