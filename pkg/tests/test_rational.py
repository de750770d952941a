from fractions import Fraction

import pytest

from asm3.core import IrrationalValue, Sqrt3Scalar, rat_binomial, rat_to_str


@pytest.mark.parametrize("x, k, expected", [
    (Fraction(4, 3), 1, Fraction(4, 3)),
    (Fraction(7, 5), 0, Fraction(1)),
    (Fraction(-1, 3), 2, Fraction(2, 9)),
    (5, 2, Fraction(10)),
    (2, 3, Fraction(0)),
])
def test_rat_binomial(x, k, expected):
    assert rat_binomial(x, k) == expected


def test_rat_binomial_negative_order():
    with pytest.raises(AssertionError):
        rat_binomial(1, -1)


def test_rat_to_str():
    assert rat_to_str(Fraction(-2, 3)) == "-2/3"
    assert rat_to_str(Fraction(10, 5)) == "2"
    assert rat_to_str(0) == "0"


def test_sqrt3_arithmetic():
    root3 = Sqrt3Scalar.sqrt3()
    assert root3 * root3 == Sqrt3Scalar(3)
    assert (1 + root3) * (1 - root3) == Sqrt3Scalar(-2)
    assert (1 + root3).norm() == -2
    assert Sqrt3Scalar(1, 2).conjugate() == Sqrt3Scalar(1, -2)
    assert Sqrt3Scalar(Fraction(1, 2), 0) == Fraction(1, 2)


def test_sqrt3_division_inverts_multiplication(rng):
    for _ in range(50):
        x = Sqrt3Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        y = Sqrt3Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(1, 9), rng.randint(1, 9)))
        assert (x * y) / y == x
        assert x + y - y == x


def test_sqrt3_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Sqrt3Scalar(1, 1) / Sqrt3Scalar()


def test_rational_value():
    assert (Sqrt3Scalar(0, 3) / Sqrt3Scalar.sqrt3()).rational_value() == 3
    with pytest.raises(IrrationalValue):
        Sqrt3Scalar(1, 1).rational_value()


def test_sqrt3_immutable():
    with pytest.raises(AttributeError):
        Sqrt3Scalar(1).rational_part = Fraction(2)


def test_rat_binomial_pascal(rng):
    for _ in range(100):
        x = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        k = rng.randint(1, 20)
        assert rat_binomial(x, k) == rat_binomial(x - 1, k - 1) + rat_binomial(x - 1, k)
