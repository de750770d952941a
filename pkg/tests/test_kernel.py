from fractions import Fraction

import pytest

from asm3.core import ASMError, KernelDimensionError, OddTrigPoly, OutOfRange, trig_mul_cos3
from asm3.genfun import row
from asm3.kernel import (beta_binomial_constants, f_closed, f_even_closed, f_even_closed_alt, f_odd_closed,
                         f_solve_linear, kernel_beta, kernel_problem, ratio_identity, reconstruct_row_from_f,
                         verify_root_multiplicity, verify_shift_sum)

F2 = OddTrigPoly({2: 2, 4: -1})


def test_f_even_closed_base():
    assert f_even_closed(0) == F2


def test_f_odd_closed_base():
    assert f_odd_closed(1) == OddTrigPoly({1: 1, 5: Fraction(-2, 3), 7: Fraction(1, 3)})
    with pytest.raises(OutOfRange):
        f_odd_closed(0)


def test_kernel_problem_order_two():
    problem = kernel_problem(2)
    assert problem.frequencies == (-2, 4)
    assert problem.matrix() == [[0, 0], [-2, 4], [0, 0]]
    assert kernel_beta(2) == [-2, -1]


def test_kernel_problem_frequencies_avoid_multiples_of_three():
    for n in range(1, 15):
        assert all(m % 3 for m in kernel_problem(n).frequencies)


@pytest.mark.parametrize("n", range(2, 9))
def test_linear_route_matches_closed_form(n):
    f = f_solve_linear(n)
    assert f == f_closed(n)
    assert f.max_frequency == 3 * n - 2
    assert verify_shift_sum(f)
    assert verify_root_multiplicity(f, n)


@pytest.mark.slow
def test_linear_route_matches_closed_form_deep():
    for n in range(9, 13):
        f = f_solve_linear(n)
        assert f == f_closed(n)
        assert f.max_frequency == 3 * n - 2
        assert verify_root_multiplicity(f, n)


def test_kernel_needs_two():
    with pytest.raises(OutOfRange):
        kernel_beta(1)


def test_kernel_dimension_error_is_asm_error():
    assert issubclass(KernelDimensionError, ASMError)


def test_shift_sum():
    assert verify_shift_sum(F2)
    assert not verify_shift_sum(OddTrigPoly({3: 1}))
    assert verify_shift_sum(f_even_closed(5))


def test_root_multiplicity():
    assert verify_root_multiplicity(F2, 2)
    assert not verify_root_multiplicity(OddTrigPoly({2: 1}), 2)
    assert verify_root_multiplicity(f_odd_closed(2), 5)
    assert verify_root_multiplicity(f_even_closed(1), 4)
    assert not verify_root_multiplicity(F2, 3)


@pytest.mark.parametrize("nu, expected", [
    (0, Fraction(1, 2)),
    (1, Fraction(4, 5)),
    (10, Fraction(31, 32)),
])
def test_ratio_identity(nu, expected):
    assert ratio_identity(nu) == expected


def test_ratio_identity_range():
    for nu in range(21):
        assert ratio_identity(nu) == Fraction(3 * nu + 1, 3 * nu + 2)


@pytest.mark.slow
def test_ratio_identity_deep():
    for nu in range(21, 51):
        assert ratio_identity(nu) == Fraction(3 * nu + 1, 3 * nu + 2)


@pytest.mark.parametrize("nu", range(4))
def test_null_vector_binomial_shape(nu):
    constants = beta_binomial_constants(nu)
    assert constants is not None
    c1, c2 = constants
    # unfolded coefficients: the constant ratio is positive
    assert c2 / c1 == ratio_identity(nu)


@pytest.mark.parametrize("nu", range(6))
def test_alternate_even_form_is_negated(nu):
    assert f_even_closed_alt(nu) == -f_even_closed(nu)


def test_cos3u_ladder():
    assert trig_mul_cos3(f_even_closed(0)) == f_odd_closed(1).scale(Fraction(-3, 2))
    for nu in range(1, 6):
        assert f_odd_closed(nu).ratio_to(trig_mul_cos3(f_even_closed(nu - 1))) is not None


@pytest.mark.parametrize("n, counts", [
    (2, (1, 1)),
    (4, (9, 36, 36, 9)),
    (5, (90, 495, 855, 495, 90)),
    (3, (2, 5, 2)),
])
def test_reconstruct_row_from_f(n, counts):
    assert reconstruct_row_from_f(n).counts == counts


@pytest.mark.parametrize("n", range(2, 11))
def test_reconstruct_matches_recurrence_route(n):
    assert reconstruct_row_from_f(n) == row(n)


def test_reconstruct_needs_two():
    with pytest.raises(OutOfRange):
        reconstruct_row_from_f(1)
