from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

# Coefficient field of everything; always reduced
Rat = Fraction

# counts[r - 1] = A(n, r; x)
Counts = List[int]

# frequency m -> b_m of sum b_m sin(mu)
Frequencies = Dict[int, Fraction]

# (point, derivative order)
Constraint = Tuple[str, int]

# Row-major grid over {-1, 0, 1}
Grid = Sequence[Sequence[int]]


class ASMError(Exception):
    """Base class for every error raised by asm3."""


class NonZeroRemainder(ASMError):
    """An exact division left a remainder; a divisibility guarantee failed."""


class NonIntegerCoefficient(ASMError):
    """A generating function coefficient that must be a nonnegative integer is not."""


class KernelDimensionError(ASMError):
    """The kernel constraint system does not have a one-dimensional null space."""


class OrderTooLarge(ASMError):
    """The requested order exceeds the enumeration limit of the chosen mode."""


class NotAnASM(ASMError):
    """A grid fails the alternating sign matrix conditions."""


class OutOfRange(ASMError):
    """An index lies outside its admissible range."""


class ZeroDenominator(ASMError):
    """A quotient that is never expected to vanish had a zero denominator."""


class IrrationalValue(ASMError):
    """A Sqrt3Scalar with a nonzero sqrt(3) part was asked for a rational value."""
