from .asm_types import *
from .constants import *
from .rational import Sqrt3Scalar, rat_binomial, rat_to_str, as_rat
from .upoly import UPoly, poly_exact_div, t_poly, w_poly
from .trig import (OddTrigPoly, trig_mul_cos, trig_mul_cos3, trig_mul_sin_squared, trig_from_w_poly,
                   trig_to_w_poly, trig_eval_derivative_at, chebyshev_u)
