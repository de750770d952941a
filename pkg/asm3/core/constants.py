from fractions import Fraction

# Guards against runaway enumeration
BRUTEFORCE_MAX_ORDER = 7
DP_MAX_ORDER = 16

# Evaluation points of the kernel constraints (u = 0 and u = pi/2)
AT_ZERO = "0"
AT_HALF_PI = "pi/2"

# Special values of w = cos 2u (u = pi/3 gives t = 0, u = pi/2 gives t = 1)
POINT_HALF = Fraction(-1, 2)
POINT_ONE = Fraction(-1)
SPECIAL_POINTS = (POINT_HALF, POINT_ONE)

# The weight whose refined counts the formula routes produce
FORMULA_WEIGHT = 3

VAR_W = "w"
VAR_T = "t"

TABLE_HEADER = ("n", "r", "count")
TOTALS_HEADER = ("n", "count")
POLY_HEADER = ("degree", "coeff")
VERIFY_HEADER = ("suite", "case", "status", "detail")

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
