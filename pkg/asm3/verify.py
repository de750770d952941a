"""Verification suites: every route cross-checked against the others.

Each suite returns one record per check; a check passes when the two sides
compare equal and otherwise carries both sides verbatim in its detail.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from asm3.configs import VerifyConfig
from asm3.core.constants import POINT_HALF, POINT_ONE, SPECIAL_POINTS, STATUS_FAIL, STATUS_PASS
from asm3.genfun import ODD_NUMERATOR, T_PLUS_ONE, g_even_from_odd, normalized, odd_from_multiplier, row
from asm3.kernel import (beta_binomial_constants, f_closed, f_even_closed, f_even_closed_alt, f_odd_closed,
                         f_solve_linear, ratio_identity, reconstruct_row_from_f, verify_root_multiplicity,
                         verify_shift_sum)
from asm3.core.trig import trig_from_w_poly, trig_mul_cos3
from asm3.oracle import MODE_BRUTEFORCE, MODE_DP, asm_count, enumerate_asms
from asm3.recurrences import (ROUTE_RECURRENCE, ROUTE_SUBSTITUTION, SEQUENCES, a3_total, f_trig_direct, g_poly,
                              multiplier_c, multiplier_c_from_half_point, phi, phi_special, total_from_odd_multiplier,
                              total_ratio, verify_f_recurrence)
from utils.records import OutputRecord, verify_record

logger = logging.getLogger("asm3.verify")

SUITE_ORACLE = "oracle"
SUITE_RECURRENCE = "recurrence"
SUITE_GENFUN = "genfun"
SUITE_KERNEL = "kernel"
SUITE_SPECIAL_POINTS = "special-points"
SUITE_RATIO_IDENTITY = "ratio-identity"
SUITE_ALL = "all"

# A(n) for the plain 1-enumeration
ASM_NUMBERS = (1, 2, 7, 42, 429, 7436, 218348, 10850216, 911835460)
KNOWN_TOTALS = (1, 2, 9, 90, 2025, 102060)


class SuiteReport(object):
    def __init__(self, suite: str):
        self.suite = suite
        self.records: List[OutputRecord] = []

    def check(self, case: str, actual: Any, expected: Any) -> bool:
        ok = actual == expected
        detail = "" if ok else f"expected {expected}, got {actual}"
        self.records.append(verify_record(self.suite, case, STATUS_PASS if ok else STATUS_FAIL, detail))
        if not ok:
            logger.info(f"{self.suite}/{case} failed: {detail}")
        return ok

    def failures(self) -> List[OutputRecord]:
        return [r for r in self.records if r.values[2] == STATUS_FAIL]


def oracle_suite(config: VerifyConfig) -> SuiteReport:
    report = SuiteReport(SUITE_ORACLE)
    oracle_config = config.oracle_config
    weights = sorted(set(config.weights) | {3})
    for n in range(1, config.oracle_n_max + 1):
        brute = {}
        for x in weights:
            brute[x] = enumerate_asms(n, x, MODE_BRUTEFORCE, oracle_config)
            dp = enumerate_asms(n, x, MODE_DP, oracle_config)
            report.check(f"n={n},x={x},bruteforce=dp", brute[x].counts, dp.counts)
            report.check(f"n={n},x={x},palindromic", brute[x].is_palindromic(), True)
            if n > 1:
                smaller = enumerate_asms(n - 1, x, MODE_DP, oracle_config)
                report.check(f"n={n},x={x},first=total(n-1)", brute[x].counts[0], smaller.total)
        report.check(f"n={n},x=3,formula=bruteforce", row(n).counts, brute[3].counts)
        if n >= 2:
            report.check(f"n={n},x=3,kernel=bruteforce", reconstruct_row_from_f(n).counts, brute[3].counts)
    for n in range(1, min(config.dp_n_max, len(ASM_NUMBERS)) + 1):
        report.check(f"n={n},asm_count", asm_count(n), ASM_NUMBERS[n - 1])
    for n in range(config.oracle_n_max + 1, config.dp_n_max + 1):
        report.check(f"n={n},x=3,formula=dp", row(n).counts, enumerate_asms(n, 3, MODE_DP, oracle_config).counts)
    return report


def recurrence_suite(config: VerifyConfig) -> SuiteReport:
    report = SuiteReport(SUITE_RECURRENCE)
    for j in SEQUENCES:
        for nu in range(config.nu_max + 1):
            report.check(f"j={j},v={nu},g_routes",
                         g_poly(j, nu, ROUTE_RECURRENCE), g_poly(j, nu, ROUTE_SUBSTITUTION))
            report.check(f"j={j},v={nu},quotient",
                         trig_from_w_poly(phi(j, nu), 2 * nu + 1), f_trig_direct(j, nu))
            if nu >= 1:
                report.check(f"j={j},v={nu},f_recurrence", verify_f_recurrence(j, nu), True)
    for n, expected in enumerate(KNOWN_TOTALS, start=1):
        report.check(f"n={n},total", a3_total(n), expected)
    for n in range(2, 2 * config.nu_max + 3):
        report.check(f"n={n},total_ratio", Fraction(a3_total(n), a3_total(n - 1)), total_ratio(n))
    for nu in range(1, config.nu_max + 1):
        report.check(f"v={nu},cross_identity",
                     4 * a3_total(2 * nu + 1) * a3_total(2 * nu - 1), 9 * a3_total(2 * nu) ** 2)
        report.check(f"v={nu},total_from_odd_multiplier", total_from_odd_multiplier(nu), a3_total(2 * nu))
    for nu in range(config.nu_max + 1):
        report.check(f"v={nu},multiplier_c", multiplier_c_from_half_point(nu), multiplier_c(nu))
    return report


def genfun_suite(config: VerifyConfig) -> SuiteReport:
    report = SuiteReport(SUITE_GENFUN)
    for n in range(1, config.row_n_max + 1):
        r = row(n)
        report.check(f"n={n},palindromic", r.is_palindromic(), True)
        report.check(f"n={n},sum", r.total, a3_total(n))
        if n > 1:
            report.check(f"n={n},first=total(n-1)", r.counts[0], a3_total(n - 1))
        report.check(f"n={n},normalized_sum", sum(normalized(n).coefficients), Fraction(1))
    for nu in range(1, config.nu_max + 1):
        n = 2 * nu
        lhs = (T_PLUS_ONE * row(n + 1).as_poly()).scale(9 * a3_total(n))
        rhs = (ODD_NUMERATOR * row(n).as_poly()).scale(a3_total(n + 1))
        report.check(f"v={nu},odd_even_identity", lhs, rhs)
        report.check(f"v={nu},even_from_odd", g_even_from_odd(nu).counts, row(n).counts)
        report.check(f"v={nu},odd_from_multiplier", odd_from_multiplier(nu).counts, row(n + 1).counts)
    return report


def kernel_suite(config: VerifyConfig) -> SuiteReport:
    report = SuiteReport(SUITE_KERNEL)
    for n in range(2, config.kernel_n_max + 1):
        closed = f_closed(n)
        report.check(f"n={n},linear=closed", f_solve_linear(n), closed)
        report.check(f"n={n},max_frequency", closed.max_frequency, 3 * n - 2)
        report.check(f"n={n},shift_sum", verify_shift_sum(closed), True)
        report.check(f"n={n},root_multiplicity", verify_root_multiplicity(closed, n), True)
        report.check(f"n={n},reconstruct_row", reconstruct_row_from_f(n).counts, row(n).counts)
        if n % 2 == 0:
            nu = (n - 2) // 2
            constants = beta_binomial_constants(nu)
            report.check(f"n={n},binomial_shape", constants is not None, True)
            if constants is not None:
                c1, c2 = constants
                report.check(f"n={n},constant_ratio", c2 / c1, ratio_identity(nu))
            report.check(f"n={n},alternate_form", f_even_closed_alt(nu), -f_even_closed(nu))
    for nu in range(1, config.kernel_n_max // 2 + 1):
        ratio = f_odd_closed(nu).ratio_to(trig_mul_cos3(f_even_closed(nu - 1)))
        report.check(f"v={nu},cos3u_ladder", ratio is not None, True)
    return report


def special_points_suite(config: VerifyConfig) -> SuiteReport:
    report = SuiteReport(SUITE_SPECIAL_POINTS)
    for j in SEQUENCES:
        for nu in range(config.nu_max + 1):
            for point in SPECIAL_POINTS:
                report.check(f"j={j},v={nu},w={point}", phi(j, nu).evaluate(point), phi_special(j, nu, point))
        for nu in range(config.nu_max):
            report.check(f"j={j},v={nu},half_point_recurrence",
                         3 * (nu + 1) * phi(j, nu + 1).evaluate(POINT_HALF),
                         8 * (2 * nu + 1) * phi(j, nu).evaluate(POINT_HALF))
        for nu in range(1, config.nu_max + 1):
            report.check(f"j={j},v={nu},one_point_recurrence",
                         nu * (2 * nu + 1) * phi(j, nu).evaluate(POINT_ONE),
                         2 * (9 * nu * nu - j * j) * phi(j, nu - 1).evaluate(POINT_ONE))
    return report


def ratio_identity_suite(config: VerifyConfig) -> SuiteReport:
    report = SuiteReport(SUITE_RATIO_IDENTITY)
    for nu in range(config.nu_max + 1):
        report.check(f"v={nu}", ratio_identity(nu), Fraction(3 * nu + 1, 3 * nu + 2))
    return report


SUITES: Dict[str, Callable[[VerifyConfig], SuiteReport]] = {
    SUITE_ORACLE: oracle_suite,
    SUITE_RECURRENCE: recurrence_suite,
    SUITE_GENFUN: genfun_suite,
    SUITE_KERNEL: kernel_suite,
    SUITE_SPECIAL_POINTS: special_points_suite,
    SUITE_RATIO_IDENTITY: ratio_identity_suite,
}
SUITE_NAMES = tuple(SUITES) + (SUITE_ALL,)


def _run_one(name: str, config: VerifyConfig) -> SuiteReport:
    logger.info(f"running suite {name}")
    report = SUITES[name](config)
    logger.info(f"suite {name}: {len(report.records)} checks, {len(report.failures())} failed")
    return report


def run_suites(suite: str, config: VerifyConfig) -> List[SuiteReport]:
    """
    Run one suite or all of them, in the fixed order of SUITES.
    @param suite: a name from SUITE_NAMES
    @param config: bounds; workers > 1 runs suites in separate processes
    @return: one report per suite, ordered as SUITES regardless of completion order
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITE_NAMES}")
    names = list(SUITES) if suite == SUITE_ALL else [suite]
    if config.workers > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(_run_one, names, [config] * len(names)))
    return [_run_one(name, config) for name in names]


def first_failure(reports: List[SuiteReport]) -> Optional[OutputRecord]:
    for report in reports:
        failures = report.failures()
        if failures:
            return failures[0]
    return None
