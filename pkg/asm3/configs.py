from typing import Tuple

from asm3.core.constants import BRUTEFORCE_MAX_ORDER, DP_MAX_ORDER


class OracleConfig:
    def __init__(self, bruteforce_max_order: int = BRUTEFORCE_MAX_ORDER,
                 dp_max_order: int = DP_MAX_ORDER,
                 workers: int = 1):
        self.bruteforce_max_order = bruteforce_max_order
        self.dp_max_order = dp_max_order
        self.workers = workers  # DP fans out over the first-row column when > 1


class VerifyConfig:
    def __init__(self, nu_max: int = 10,
                 oracle_n_max: int = 6,
                 dp_n_max: int = 9,
                 row_n_max: int = 20,
                 kernel_n_max: int = 8,
                 weights: Tuple[int, ...] = (1, 2, 3),
                 workers: int = 1,
                 oracle_config: OracleConfig = None):
        self.nu_max = nu_max
        self.oracle_n_max = oracle_n_max  # brute force range, cross-checked against dp
        self.dp_n_max = dp_n_max
        self.row_n_max = row_n_max  # structural row invariants
        self.kernel_n_max = kernel_n_max
        self.weights = weights
        self.workers = workers  # suites run in parallel when > 1
        self.oracle_config = oracle_config if oracle_config is not None else OracleConfig()


class DeepVerifyConfig(VerifyConfig):
    def __init__(self):
        VerifyConfig.__init__(self,
                              nu_max=30,
                              oracle_n_max=7,  # 218348 matrices at n = 7
                              dp_n_max=12,
                              row_n_max=40,
                              kernel_n_max=12,
                              weights=(1, 2, 3),
                              workers=1
                              )
