from fractions import Fraction

import pytest

from asm3.core import POINT_HALF, POINT_ONE, OddTrigPoly, Sqrt3Scalar, t_poly, trig_from_w_poly, w_poly
from asm3.recurrences import (ROUTE_RECURRENCE, ROUTE_SUBSTITUTION, a3_total, f_trig_direct, g_poly, multiplier_c,
                              multiplier_c_from_half_point, multiplier_r, phi, phi_special, substitute_w,
                              total_from_odd_multiplier, total_ratio, verify_f_recurrence)

ONE_PLUS_T_PLUS_T2 = t_poly([1, 1, 1])
ONE_PLUS_4T_PLUS_T2 = t_poly([1, 4, 1])
P = t_poly([2, 5, 2])


@pytest.mark.parametrize("j, nu, expected", [
    (1, 0, w_poly([1])),
    (1, 1, w_poly([0, Fraction(-16, 3)])),
    (2, 0, w_poly([0, 2])),
    (2, 1, w_poly([Fraction(-4, 3), 0, Fraction(-16, 3)])),
    (1, 2, w_poly([Fraction(16, 9), 0, Fraction(320, 9)])),
])
def test_phi(j, nu, expected):
    assert phi(j, nu) == expected


@pytest.mark.parametrize("j, nu, expected", [
    (1, 1, OddTrigPoly({8: Fraction(2, 3), 4: Fraction(-4, 3)})),
    (2, 1, OddTrigPoly({10: Fraction(1, 3), 2: Fraction(-5, 3)})),
    (1, 0, OddTrigPoly({2: 1})),
])
def test_f_trig_direct(j, nu, expected):
    assert f_trig_direct(j, nu) == expected


def test_f2_zero_is_sin4u_not_sin2u():
    # the binomial sum at v = 0 is sin 4u = sin 2u * Phi^(2)_0(cos 2u)
    assert f_trig_direct(2, 0) == OddTrigPoly({4: 1})
    assert f_trig_direct(2, 0) != OddTrigPoly({2: 1})
    assert trig_from_w_poly(phi(2, 0), 1) == OddTrigPoly({4: 1})


def test_f_trig_direct_rejects_sequence():
    with pytest.raises(ValueError):
        f_trig_direct(3, 1)


@pytest.mark.parametrize("j", [1, 2])
@pytest.mark.parametrize("nu", range(8))
def test_quotient_expands_to_binomial_sum(j, nu):
    assert trig_from_w_poly(phi(j, nu), 2 * nu + 1) == f_trig_direct(j, nu)


@pytest.mark.slow
@pytest.mark.parametrize("j", [1, 2])
def test_quotient_expands_to_binomial_sum_deep(j):
    for nu in range(8, 21):
        assert trig_from_w_poly(phi(j, nu), 2 * nu + 1) == f_trig_direct(j, nu)


@pytest.mark.parametrize("j", [1, 2])
@pytest.mark.parametrize("nu", range(1, 8))
def test_f_recurrence(j, nu):
    assert verify_f_recurrence(j, nu)


def test_g_initial_data():
    for route in (ROUTE_RECURRENCE, ROUTE_SUBSTITUTION):
        assert g_poly(1, 0, route) == ONE_PLUS_T_PLUS_T2.scale(Fraction(1, 3))
        expected = (P ** 2 + t_poly([0, 0, 9])).scale(Fraction(-1, 18))
        assert g_poly(2, 1, route) == expected


def test_g_substitution_factors():
    expected = (ONE_PLUS_T_PLUS_T2 * ONE_PLUS_4T_PLUS_T2).scale(Fraction(2, 9))
    assert g_poly(1, 1, ROUTE_SUBSTITUTION) == expected
    assert g_poly(1, 1, ROUTE_RECURRENCE) == (P ** 2 - t_poly([0, 0, 9])).scale(Fraction(1, 18))


@pytest.mark.parametrize("j", [1, 2])
@pytest.mark.parametrize("nu", range(10))
def test_g_routes_agree(j, nu):
    assert g_poly(j, nu, ROUTE_RECURRENCE) == g_poly(j, nu, ROUTE_SUBSTITUTION)


@pytest.mark.slow
@pytest.mark.parametrize("j", [1, 2])
def test_g_routes_agree_deep(j):
    for nu in range(10, 31):
        assert g_poly(j, nu, ROUTE_RECURRENCE) == g_poly(j, nu, ROUTE_SUBSTITUTION)


def test_g_unknown_route():
    with pytest.raises(ValueError):
        g_poly(1, 1, "guess")


def test_substitute_w_constant():
    assert substitute_w(w_poly([1]), 1) == ONE_PLUS_T_PLUS_T2
    assert substitute_w(w_poly([1]), 0) == t_poly([1])
    # w (t^2+t+1) = -(t^2+4t+1)/2
    assert substitute_w(w_poly([0, 1]), 1) == ONE_PLUS_4T_PLUS_T2.scale(Fraction(-1, 2))


@pytest.mark.parametrize("n, expected", list(enumerate([1, 2, 9, 90, 2025, 102060], start=1)))
def test_a3_total(n, expected):
    assert a3_total(n) == expected


def test_total_ratios():
    assert total_ratio(4) == 10
    assert total_ratio(5) == Fraction(45, 2)
    for n in range(2, 41):
        assert Fraction(a3_total(n), a3_total(n - 1)) == total_ratio(n)


def test_odd_even_cross_identity():
    for nu in range(1, 20):
        assert 4 * a3_total(2 * nu + 1) * a3_total(2 * nu - 1) == 9 * a3_total(2 * nu) ** 2


@pytest.mark.parametrize("j, nu, point, expected", [
    (1, 1, POINT_ONE, Fraction(16, 3)),
    (2, 2, POINT_ONE, Fraction(-128, 3)),
    (1, 2, POINT_ONE, Fraction(112, 3)),
])
def test_phi_special(j, nu, point, expected):
    assert phi_special(j, nu, point) == expected


@pytest.mark.parametrize("j", [1, 2])
def test_phi_special_matches_evaluation(j):
    for nu in range(12):
        for point in (POINT_HALF, POINT_ONE):
            assert phi(j, nu).evaluate(point) == phi_special(j, nu, point)


@pytest.mark.parametrize("j", [1, 2])
def test_special_point_recurrences(j):
    for nu in range(12):
        assert 3 * (nu + 1) * phi_special(j, nu + 1, POINT_HALF) == 8 * (2 * nu + 1) * phi_special(j, nu, POINT_HALF)
    for nu in range(1, 12):
        assert nu * (2 * nu + 1) * phi_special(j, nu, POINT_ONE) \
               == 2 * (9 * nu * nu - j * j) * phi_special(j, nu - 1, POINT_ONE)


def test_half_point_closed_form_indexes_phi_nu():
    assert phi_special(1, 2, POINT_HALF) == Fraction(32, 3)
    assert phi_special(2, 0, POINT_HALF) == -1
    for j in (1, 2):
        for nu in (0, 1):
            assert phi(j, nu).evaluate(POINT_HALF) == phi_special(j, nu, POINT_HALF)
    # read with index v + 1 the closed form misses the initial data
    assert phi(1, 1).evaluate(POINT_HALF) != phi_special(1, 0, POINT_HALF)


def test_phi_special_unknown_point():
    with pytest.raises(ValueError):
        phi_special(1, 1, Fraction(0))


def test_multiplier_c():
    assert multiplier_c(0) == Sqrt3Scalar(0, Fraction(1, 4))
    assert multiplier_c(1) == Sqrt3Scalar(0, Fraction(27, 128))
    for nu in range(15):
        c = multiplier_c(nu)
        assert c.rational_part == 0
        assert c == multiplier_c_from_half_point(nu)


def test_multiplier_r():
    assert multiplier_r(1) == Fraction(-3, 2)
    assert multiplier_r(2) == Fraction(-15, 2)
    assert all(multiplier_r(nu) < 0 for nu in range(1, 15))
    for nu in range(1, 15):
        assert total_from_odd_multiplier(nu) == a3_total(2 * nu)
