# src\oracle\crosscheck.py
# DP-versus-oracle comparison for one instance: every variant, every k, every reconstruction

PRINT_PREFIX = "ORACLE - CROSSCHECK"

# Standard library imports
import math

# Local imports
from src.core.evaluate import cut_value_pairwise
from src.core.multiset import VertexMultiset
from src.core.normalize import normalize
from src.core.tree import WeightedTree
from src.solver.dp import backtrack, pick_k, solve_all
from src.solver.spec import Objective
from .bruteforce import brute_force_table

RELATIVE_TOLERANCE = 1e-9


def _same(a: float, b: float, exact: bool) -> bool:
    return a == b if exact else math.isclose(a, b, rel_tol=RELATIVE_TOLERANCE, abs_tol=RELATIVE_TOLERANCE)


def crosscheck_instance(tree: WeightedTree, multiset: VertexMultiset, root: int = 0) -> tuple[list[str], int]:
    """
    Compare the DP with the exhaustive oracle on one instance.

    Checks, for both objectives: opt_k against the oracle for every k (which covers
    both bisections and both (k, m-k) partitions), the any-split optimum (MAX-CUT), and
    that every backtracked partition re-evaluates to its opt_k.
    Integer-weight instances are compared exactly, others with a 1e-9 relative tolerance.

    Returns:
        (mismatches, checks): human-readable mismatch lines (empty when everything agrees) and the
        number of comparisons made
    """
    exact = all(float(w).is_integer() for _, _, w in tree.edges)
    oracle = brute_force_table(tree, multiset)
    instance = normalize(tree, multiset, root)
    mismatches: list[str] = []
    checks = 0

    for objective in (Objective.MAXIMIZE, Objective.MINIMIZE):
        table, opt_values = solve_all(instance, objective)
        expected = oracle.best(objective)
        name = objective.value

        for k, (got, want) in enumerate(zip(opt_values.tolist(), expected)):
            checks += 2
            if not _same(got, want, exact):
                mismatches.append(f"{name} k={k}: dp={got} oracle={want}")
            rebuilt = cut_value_pairwise(tree, multiset, backtrack(table, k))
            if not _same(rebuilt, got, exact):
                mismatches.append(f"{name} k={k}: backtracked partition evaluates to {rebuilt}, dp reported {got}")

        if objective is Objective.MAXIMIZE:
            checks += 1
            best_k = pick_k(opt_values, objective)
            if not _same(float(opt_values[best_k]), max(expected), exact):
                mismatches.append(f"max-cut: dp={opt_values[best_k]} oracle={max(expected)}")

    if mismatches:
        print(f"[WARNING] [{PRINT_PREFIX}] {len(mismatches)} mismatch(es) on n={tree.vertex_count}, m={multiset.total_mass}")
    return mismatches, checks
