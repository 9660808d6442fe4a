"""
tests/test_solver.py
====================
DP solver: worked examples, oracle equivalence, structural invariants, cell recurrences,
transition instrumentation and degenerate inputs.
"""

import numpy as np
import pytest
from hypothesis import given, settings

from src.core.errors import KOutOfRange, OddMassForBisection, SolverError
from src.core.evaluate import cut_value_pairwise
from src.core.generators import generate_instance, generate_trial
from src.core.line import line_to_tree, threshold_cut
from src.core.multiset import validate_multiset
from src.core.normalize import normalize
from src.core.tree import validate_tree
from src.oracle.bruteforce import brute_force_optimum, direct_subproblem_value
from src.oracle.crosscheck import crosscheck_instance
from src.solver.dp import backtrack, build_table, solve, solve_all
from src.solver.spec import Constraint, Objective, ProblemSpec, spec_for_variant
from src.solver.table import LEAF_MARKER
from src.solver.transitions import base_case_leaf, transition_one_child, transition_two_children

from .strategies import instances

PROPERTY_SETTINGS = settings(max_examples=120, deadline=None)

FEASIBLE_SPECS = (
    ProblemSpec.max_cut(),
    ProblemSpec.min_cut(),
    ProblemSpec.max_bisection(),
    ProblemSpec.min_bisection(),
)


def _solve(tree, multiset, spec, root=0):
    return solve(normalize(tree, multiset, root), spec)


class TestWorkedExamples:
    def test_unit_line_min_bisection_beats_every_threshold(self, unit_line):
        tree, multiset = unit_line
        result = _solve(tree, multiset, ProblemSpec.min_bisection())
        assert result.value == 6
        assert result.k == 2
        assert cut_value_pairwise(tree, multiset, result.partition) == 6
        # Neither threshold bisection reaches the optimum
        threshold_value, _ = threshold_cut(tree, multiset, 2, maximize=False)
        assert threshold_value == 8
        assert result.partition.side_a not in ({0: 1, 1: 1, 2: 0, 3: 0}, {0: 0, 1: 0, 2: 1, 3: 1})

    def test_unit_line_max_bisection(self, unit_line):
        tree, multiset = unit_line
        assert _solve(tree, multiset, ProblemSpec.max_bisection()).value == 8

    def test_three_point_max_cut(self):
        tree, multiset = line_to_tree([0, 1, 2])
        result = _solve(tree, multiset, ProblemSpec.max_cut())
        assert result.value == 3
        assert result.k == 1 # Smallest optimal k
        assert result.partition.side_a in ({0: 1, 1: 0, 2: 0}, {0: 0, 1: 0, 2: 1})

    def test_empty_side_partition(self, small_star):
        tree, multiset = small_star
        assert _solve(tree, multiset, ProblemSpec.max_partition(0)).value == 0
        assert _solve(tree, multiset, ProblemSpec.min_partition(5)).value == 0

    def test_star_partition(self, small_star):
        tree, multiset = small_star
        # Center plus one leaf against three leaves: 3 + 3 * 2
        assert _solve(tree, multiset, ProblemSpec.min_partition(2)).value == 9
        # Two leaves against center and two leaves: 2 * (1 + 2 + 2)
        assert _solve(tree, multiset, ProblemSpec.max_partition(2)).value == 10

    def test_min_cut_is_zero(self, small_star):
        tree, multiset = small_star
        result = _solve(tree, multiset, ProblemSpec.min_cut())
        assert result.value == 0
        assert result.k == 0


class TestProblemSpec:
    def test_bisection_needs_even_mass(self):
        tree, multiset = line_to_tree([0, 1, 2])
        with pytest.raises(OddMassForBisection) as excinfo:
            _solve(tree, multiset, ProblemSpec.min_bisection())
        assert excinfo.value.exit_code == 3

    @pytest.mark.parametrize("k", [-1, 4])
    def test_k_out_of_range(self, k):
        tree, multiset = line_to_tree([0, 1, 2])
        with pytest.raises(KOutOfRange):
            _solve(tree, multiset, ProblemSpec.max_partition(k))

    def test_variant_mapping(self):
        assert spec_for_variant("max-cut") == ProblemSpec(Objective.MAXIMIZE, Constraint.ANY_SPLIT)
        assert spec_for_variant("min-partition", 2).k == 2
        with pytest.raises(SolverError):
            spec_for_variant("max-partition")
        with pytest.raises(SolverError):
            spec_for_variant("sparsest-cut")


class TestOracleEquivalence:
    def test_seeded_batch(self):
        """500 random instances: every k of both objectives, plus every reconstruction."""
        for trial in range(500):
            tree, multiset = generate_trial(42, trial, max_n=7, max_weight=10, max_mult=3, max_mass=8)
            mismatches, checks = crosscheck_instance(tree, multiset)
            assert mismatches == [], f"trial {trial}: {mismatches}"
            assert checks == 4 * (multiset.total_mass + 1) + 1

    @given(instances(max_weight=6, fractional=True))
    @settings(max_examples=60, deadline=None)
    def test_fractional_weights(self, instance_pair):
        tree, multiset = instance_pair
        mismatches, _ = crosscheck_instance(tree, multiset)
        assert mismatches == []

    @given(instances())
    @settings(max_examples=60, deadline=None)
    def test_every_variant_matches_the_oracle(self, instance_pair):
        tree, multiset = instance_pair
        m = multiset.total_mass
        specs = [ProblemSpec.max_cut()]
        specs += [ProblemSpec.max_partition(k) for k in range(m + 1)]
        specs += [ProblemSpec.min_partition(k) for k in range(m + 1)]
        if m % 2 == 0:
            specs += [ProblemSpec.max_bisection(), ProblemSpec.min_bisection()]
        instance = normalize(tree, multiset)
        for spec in specs:
            result = solve(instance, spec)
            expected, witness = brute_force_optimum(tree, multiset, spec)
            assert result.value == expected
            assert cut_value_pairwise(tree, multiset, witness) == expected
            assert cut_value_pairwise(tree, multiset, result.partition) == result.value


class TestInvariants:
    @given(instances(max_n=9, max_mass=10))
    @PROPERTY_SETTINGS
    def test_complement_symmetry(self, instance_pair):
        tree, multiset = instance_pair
        instance = normalize(tree, multiset)
        for objective in Objective:
            _, opt_values = solve_all(instance, objective)
            assert np.array_equal(opt_values, opt_values[::-1])

    @given(instances(max_n=9, max_mass=10))
    @PROPERTY_SETTINGS
    def test_root_invariance(self, instance_pair):
        tree, multiset = instance_pair
        for objective in Objective:
            _, reference = solve_all(normalize(tree, multiset, 0), objective)
            for root in range(1, tree.vertex_count):
                _, opt_values = solve_all(normalize(tree, multiset, root), objective)
                assert np.array_equal(opt_values, reference)

    @given(instances(max_n=9, max_mass=10))
    @PROPERTY_SETTINGS
    def test_scaling_equivariance(self, instance_pair):
        tree, multiset = instance_pair
        scaled = validate_tree(tree.vertex_count, [(u, v, 3 * w) for u, v, w in tree.edges])
        for spec in (ProblemSpec.max_cut(), ProblemSpec.min_partition(multiset.total_mass // 2)):
            base = _solve(tree, multiset, spec)
            result = _solve(scaled, multiset, spec)
            assert result.value == 3 * base.value
            # Each optimal partition stays optimal under the other weighting
            assert cut_value_pairwise(tree, multiset, result.partition) == base.value
            assert cut_value_pairwise(scaled, multiset, base.partition) == result.value

    @given(instances(max_n=9, max_mass=10))
    @PROPERTY_SETTINGS
    def test_every_k_reconstructs(self, instance_pair):
        tree, multiset = instance_pair
        table, opt_values = solve_all(normalize(tree, multiset), Objective.MINIMIZE)
        for k, value in enumerate(opt_values.tolist()):
            partition = backtrack(table, k)
            assert partition.size_a == k
            assert cut_value_pairwise(tree, multiset, partition) == value

    def test_deterministic(self, small_star):
        tree, multiset = small_star
        first = _solve(tree, multiset, ProblemSpec.max_partition(2))
        second = _solve(tree, multiset, ProblemSpec.max_partition(2))
        assert first.partition == second.partition
        assert np.array_equal(first.opt_values, second.opt_values)


class TestTransitions:
    @given(instances(max_n=8, max_mass=8))
    @settings(max_examples=80, deadline=None)
    def test_cells_match_rows(self, instance_pair):
        tree, multiset = instance_pair
        instance = normalize(tree, multiset)
        for objective in Objective:
            table = build_table(instance, objective)
            for v in instance.post_order:
                kids = instance.children[v]
                rows, cols = table.values[v].shape
                for p in range(rows):
                    for s in range(cols):
                        if not kids:
                            assert table.value(v, p, s) == 0
                            assert table.choices[v][p, s] == LEAF_MARKER
                            continue
                        if len(kids) == 1:
                            value, choice = transition_one_child(instance, v, p, s, table.values[kids[0]])
                        else:
                            value, choice = transition_two_children(
                                instance, v, p, s, (table.values[kids[0]], table.values[kids[1]]), objective
                            )
                        assert table.value(v, p, s) == value
                        assert table.choices[v][p, s] == choice

    @given(instances(max_n=5, max_mass=6))
    @settings(max_examples=30, deadline=None)
    def test_cells_match_the_subproblem_definition(self, instance_pair):
        tree, multiset = instance_pair
        instance = normalize(tree, multiset)
        for objective in Objective:
            table = build_table(instance, objective)
            for v in instance.post_order:
                rows, cols = table.values[v].shape
                for p in range(rows):
                    for s in range(cols):
                        assert table.value(v, p, s) == pytest.approx(direct_subproblem_value(instance, v, p, s, objective))

    def test_leaf_row_shape(self, unit_line):
        tree, multiset = unit_line
        instance = normalize(tree, multiset)
        values, choices = base_case_leaf(instance, 3)
        assert values.shape == (2, 4)
        assert not values.any()
        assert (choices == LEAF_MARKER).all()

    def test_choice_is_smallest_optimal_split(self):
        # Two unit legs with two copies each; at the root cell (p=2, s=0) the splits score 8, 4, 8
        tree = validate_tree(3, [(0, 1, 1), (0, 2, 1)])
        multiset = validate_multiset(tree, {1: 2, 2: 2})
        instance = normalize(tree, multiset)
        maximum = build_table(instance, Objective.MAXIMIZE)
        minimum = build_table(instance, Objective.MINIMIZE)
        assert maximum.value(0, 2, 0) == 8
        assert maximum.choices[0][2, 0] == 0
        assert minimum.value(0, 2, 0) == 4
        assert minimum.choices[0][2, 0] == 1

    @pytest.mark.parametrize("size", [2, 5, 12])
    def test_path_uses_no_branching_rows(self, size):
        tree, multiset = generate_instance("path", size, seed=size, max_weight=10, max_mult=2)
        stats = _solve(tree, multiset, ProblemSpec.max_cut()).stats
        assert stats.two_child_rows == 0
        assert stats.pendant_merges == size - 1
        assert stats.leaf_rows == size

    def test_path_with_empty_interior(self):
        tree = validate_tree(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
        multiset = validate_multiset(tree, {0: 1, 3: 1})
        stats = _solve(tree, multiset, ProblemSpec.max_cut()).stats
        assert stats.as_dict() == {"leaf_rows": 2, "one_child_rows": 2, "two_child_rows": 0, "pendant_merges": 1}

    def test_star_uses_branching_rows(self, small_star):
        tree, multiset = small_star
        stats = _solve(tree, multiset, ProblemSpec.max_cut()).stats
        assert stats.two_child_rows > 0


class TestDegenerate:
    @pytest.mark.parametrize("masses", [{}, {2: 1}])
    def test_tiny_mass(self, masses):
        tree = validate_tree(3, [(0, 1, 4), (1, 2, 5)])
        multiset = validate_multiset(tree, masses)
        m = multiset.total_mass
        specs = [ProblemSpec.max_cut(), ProblemSpec.min_cut()]
        specs += [ProblemSpec.max_partition(k) for k in range(m + 1)]
        specs += [ProblemSpec.min_partition(k) for k in range(m + 1)]
        if m % 2 == 0:
            specs += [ProblemSpec.max_bisection(), ProblemSpec.min_bisection()]
        for spec in specs:
            assert _solve(tree, multiset, spec).value == 0

    def test_single_copy_bisection_is_infeasible(self):
        tree = validate_tree(1, [])
        with pytest.raises(OddMassForBisection):
            _solve(tree, validate_multiset(tree, {0: 1}), ProblemSpec.max_bisection())

    @pytest.mark.parametrize("family", ["random-tree", "star", "caterpillar"])
    def test_extreme_k(self, family):
        tree, multiset = generate_instance(family, 8, seed=11, max_mult=2)
        m = multiset.total_mass
        for k in (0, m):
            assert _solve(tree, multiset, ProblemSpec.max_partition(k)).value == 0
            assert _solve(tree, multiset, ProblemSpec.min_partition(k)).value == 0

    def test_all_mass_on_one_vertex(self):
        tree, _ = generate_instance("random-tree", 6, seed=4)
        multiset = validate_multiset(tree, {3: 6})
        for spec in FEASIBLE_SPECS + (ProblemSpec.max_partition(2), ProblemSpec.min_partition(5)):
            assert _solve(tree, multiset, spec).value == 0

    def test_zero_weight_tree(self):
        tree = validate_tree(3, [(0, 1, 0), (1, 2, 0)])
        multiset = validate_multiset(tree, {0: 2, 1: 1, 2: 1})
        assert _solve(tree, multiset, ProblemSpec.max_cut()).value == 0
