import numpy as np
import pytest

from asm3.configs import OracleConfig
from asm3.core import NotAnASM, OrderTooLarge
from asm3.genfun import row
from asm3.kernel import reconstruct_row_from_f
from asm3.oracle import (MODE_BRUTEFORCE, MODE_DP, asm_count, count_minus_ones, enumerate_asms, is_asm, iter_asms,
                         row_transitions)

ASM_NUMBERS = [1, 2, 7, 42, 429, 7436]
CENTER = [[0, 1, 0], [1, -1, 1], [0, 1, 0]]


@pytest.mark.parametrize("mode", [MODE_BRUTEFORCE, MODE_DP])
@pytest.mark.parametrize("n, x, counts", [
    (1, 3, (1,)),
    (3, 3, (2, 5, 2)),
    (3, 1, (2, 3, 2)),
    (4, 1, (7, 14, 14, 7)),
])
def test_enumerate(mode, n, x, counts):
    assert enumerate_asms(n, x, mode).counts == counts


def test_count_minus_ones():
    assert count_minus_ones(np.eye(3, dtype=int)) == 0
    assert count_minus_ones(CENTER) == 1
    with pytest.raises(NotAnASM):
        count_minus_ones([[1, 0], [1, 0]])
    with pytest.raises(NotAnASM):
        count_minus_ones([[1, -1, 1], [0, 1, 0], [0, 1, 0]])


def test_is_asm():
    assert is_asm(CENTER)
    assert not is_asm([[0, 1, 0], [1, 1, -1], [0, -1, 1]])
    assert not is_asm([[2]])
    assert not is_asm([[1, 0]])


@pytest.mark.parametrize("n", range(1, 6))
def test_iter_asms(n):
    grids = list(iter_asms(n))
    assert len(grids) == ASM_NUMBERS[n - 1]
    assert all(is_asm(g) for g in grids)
    assert len({g.tobytes() for g in grids}) == len(grids)


def test_row_transitions_from_empty_state():
    assert set(row_transitions(0, 2)) == {(1, 0, (1, 0)), (2, 0, (0, 1))}
    # a -1 only below an open column, between two +1 entries
    assert (0b101, 1, (1, -1, 1)) in row_transitions(0b010, 3)


def test_order_limits():
    with pytest.raises(OrderTooLarge):
        list(iter_asms(8))
    with pytest.raises(OrderTooLarge):
        enumerate_asms(17, 1, MODE_DP)
    with pytest.raises(OrderTooLarge):
        enumerate_asms(4, 1, MODE_BRUTEFORCE, OracleConfig(bruteforce_max_order=3))
    with pytest.raises(ValueError):
        enumerate_asms(3, 1, "sample")


def test_asm_count():
    assert [asm_count(n) for n in range(1, 7)] == ASM_NUMBERS


def test_two_enumeration_is_power_of_two():
    for n in range(1, 7):
        assert enumerate_asms(n, 2, MODE_DP).total == 2 ** (n * (n - 1) // 2)


@pytest.mark.parametrize("x", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 6))
def test_bruteforce_matches_dp(n, x):
    assert enumerate_asms(n, x, MODE_BRUTEFORCE).counts == enumerate_asms(n, x, MODE_DP).counts


def test_dp_workers_agree():
    assert enumerate_asms(6, 3, MODE_DP, OracleConfig(workers=2)) == enumerate_asms(6, 3, MODE_DP)


@pytest.mark.parametrize("n", range(1, 7))
def test_three_routes_agree(n):
    oracle = enumerate_asms(n, 3, MODE_BRUTEFORCE if n <= 5 else MODE_DP)
    assert row(n) == oracle
    if n >= 2:
        assert reconstruct_row_from_f(n) == oracle


@pytest.mark.slow
def test_three_routes_agree_order_seven():
    oracle = enumerate_asms(7, 3, MODE_BRUTEFORCE)
    assert oracle.total == 11573604
    assert row(7) == oracle
    assert reconstruct_row_from_f(7) == oracle


@pytest.mark.slow
@pytest.mark.parametrize("n", range(8, 13))
def test_formula_matches_dp(n):
    assert row(n) == enumerate_asms(n, 3, MODE_DP)
