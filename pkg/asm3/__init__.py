import logging

logger = logging.getLogger("asm3")
logger.setLevel(logging.INFO)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())

from asm3.core import ASMError, OddTrigPoly, Rat, Sqrt3Scalar, UPoly
from asm3.recurrences import a3_total, g_poly, phi
from asm3.genfun import RefinedRow, generating_function, normalized, refined, row
from asm3.kernel import f_closed, f_solve_linear, reconstruct_row_from_f
from asm3.oracle import enumerate_asms
from asm3.configs import OracleConfig, VerifyConfig, DeepVerifyConfig
