"""Ground-truth weighted enumeration of alternating sign matrices.

A prefix of rows is a valid ASM prefix iff every partial column sum lies in
{0, 1}; the column sums are carried as a bitmask (bit j = column j). Rows
that may follow a state are produced by a walk along the row that keeps the
running row sum in {0, 1}: +1 only over a 0 bit, -1 only over a 1 bit.
"""
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import numpy as np

from asm3.configs import OracleConfig
from asm3.core.asm_types import Grid, NotAnASM, OrderTooLarge
from asm3.genfun import RefinedRow

logger = logging.getLogger("asm3.oracle")

MODE_BRUTEFORCE = "bruteforce"
MODE_DP = "dp"
MODES = (MODE_BRUTEFORCE, MODE_DP)

# (next state, number of -1 entries, row entries)
Transition = Tuple[int, int, Tuple[int, ...]]


@lru_cache(maxsize=None)
def row_transitions(state: int, n: int) -> Tuple[Transition, ...]:
    out: List[Transition] = []

    def walk(j: int, row_sum: int, nxt: int, minus: int, entries: Tuple[int, ...]):
        if j == n:
            if row_sum == 1:
                out.append((nxt, minus, entries))
            return
        bit = 1 << j
        walk(j + 1, row_sum, nxt, minus, entries + (0,))
        if not state & bit and row_sum == 0:
            walk(j + 1, 1, nxt | bit, minus, entries + (1,))
        if state & bit and row_sum == 1:
            walk(j + 1, 0, nxt & ~bit, minus + 1, entries + (-1,))

    walk(0, 0, state, 0, ())
    return tuple(out)


def is_asm(grid: Grid) -> bool:
    g = np.asarray(grid)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] == 0:
        return False
    if not np.isin(g, (-1, 0, 1)).all():
        return False
    for axis in (0, 1):
        partial = np.cumsum(g, axis=axis)
        if not np.isin(partial, (0, 1)).all():
            return False
        if not (partial.take(-1, axis=axis) == 1).all():
            return False
    return True


def count_minus_ones(grid: Grid) -> int:
    """
    @raise NotAnASM: grid is not an alternating sign matrix
    """
    if not is_asm(grid):
        raise NotAnASM(f"not an alternating sign matrix:\n{np.asarray(grid)}")
    return int((np.asarray(grid) == -1).sum())


def iter_asms(n: int, config: OracleConfig = OracleConfig()) -> Iterator[np.ndarray]:
    """All ASMs of order n, grouped by the column of the first-row 1"""
    if n > config.bruteforce_max_order:
        raise OrderTooLarge(f"brute force is limited to n <= {config.bruteforce_max_order}, got {n}")
    full = (1 << n) - 1

    def extend(state: int, rows: List[Tuple[int, ...]]):
        if len(rows) == n:
            if state == full:
                yield np.array(rows, dtype=np.int64)
            return
        for nxt, _, entries in row_transitions(state, n):
            rows.append(entries)
            yield from extend(nxt, rows)
            rows.pop()

    for r in range(n):
        first = tuple(1 if j == r else 0 for j in range(n))
        yield from extend(1 << r, [first])


def _bruteforce(n: int, x: int, config: OracleConfig) -> List[int]:
    counts = [0] * n
    for grid in iter_asms(n, config):
        r = int(np.argmax(grid[0]))
        counts[r] += x ** count_minus_ones(grid)
    return counts


def _dp_column(n: int, x: int, r: int) -> int:
    dist: Dict[int, int] = {1 << r: 1}
    for _ in range(n - 1):
        nxt_dist: Dict[int, int] = defaultdict(int)
        for state, weight in dist.items():
            for nxt, minus, _ in row_transitions(state, n):
                nxt_dist[nxt] += weight * x ** minus
        dist = nxt_dist
    logger.debug(f"dp n={n} r={r + 1}: {len(dist)} final states")
    return dist.get((1 << n) - 1, 0)


def _dp(n: int, x: int, config: OracleConfig) -> List[int]:
    if n > config.dp_max_order:
        raise OrderTooLarge(f"dp is limited to n <= {config.dp_max_order}, got {n}")
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(_dp_column, [n] * n, [x] * n, range(n)))
    return [_dp_column(n, x, r) for r in range(n)]


def enumerate_asms(n: int, x: int, mode: str = MODE_DP, config: OracleConfig = OracleConfig()) -> RefinedRow:
    """
    counts[r-1] = sum over ASMs of order n with first-row 1 in column r of x^(number of -1 entries)
    @raise OrderTooLarge: n exceeds the limit of the mode
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if x < 0:
        raise ValueError(f"weight must be nonnegative, got {x}")
    if mode == MODE_BRUTEFORCE:
        counts = _bruteforce(n, x, config)
    elif mode == MODE_DP:
        counts = _dp(n, x, config)
    else:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    return RefinedRow(n, tuple(counts), sum(counts), weight=x)


def asm_count(n: int) -> int:
    """A(n), the plain number of ASMs of order n"""
    return enumerate_asms(n, 1, MODE_DP).total
