# src\solver\__init__.py
# Exact DP over normalized tree instances: one table per objective gives every split size at once.

from .spec import Objective, Constraint, ProblemSpec, VARIANTS, spec_for_variant
from .table import DPTable, TransitionStats, LEAF_MARKER
from .transitions import base_case_leaf, transition_one_child, transition_two_children
from .dp import SolveResult, TIE_BREAK_POLICY, build_table, solve_all, backtrack, pick_k, solve
