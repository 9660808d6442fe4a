# src\oracle\__init__.py
# Dumb exhaustive search kept independent of the DP; used by tests and the verify command.

from .bruteforce import (
    ORACLE_MAX_MASS,
    SUBPROBLEM_MAX_MASS,
    OracleTable,
    brute_force_table,
    brute_force_optimum,
    direct_subproblem_value,
)
from .crosscheck import crosscheck_instance
