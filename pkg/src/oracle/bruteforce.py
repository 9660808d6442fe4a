# src\oracle\bruteforce.py
# Exhaustive ground truth for the DP: optimal partitions over every distinguishable assignment,
# and the subproblem objective evaluated straight from its definition.
# Copies on one vertex are interchangeable, so assignments are per-vertex side-A count vectors.

PRINT_PREFIX = "ORACLE"

# Standard library imports
import itertools
import math
from dataclasses import dataclass

# Third-party imports
import numpy as np

# Local imports
from src.core.errors import InstanceTooLargeForOracle, KOutOfRange
from src.core.evaluate import cut_value_pairwise
from src.core.multiset import Partition, VertexMultiset
from src.core.normalize import NormalizedInstance
from src.core.tree import WeightedTree, all_distances_from
from src.solver.spec import Objective, ProblemSpec

ORACLE_MAX_MASS = 20
SUBPROBLEM_MAX_MASS = 15
CHUNK_SIZE = 1 << 15


@dataclass
class OracleTable:
    """Best MAX and MIN cut value for every side-A size k = 0..m, with witnesses."""
    support: list[int]
    best_max: list[float]
    best_min: list[float]
    witness_max: list[tuple[int, ...]] # Side-A count vector over support
    witness_min: list[tuple[int, ...]]
    index_max: list[int] # Enumeration index of the witness, for lexicographic tie-breaks across k
    index_min: list[int]
    enumerated: int

    def best(self, objective: Objective) -> list[float]:
        return self.best_max if objective is Objective.MAXIMIZE else self.best_min


def _check_oracle_size(multiset: VertexMultiset) -> None:
    if multiset.total_mass > ORACLE_MAX_MASS:
        raise InstanceTooLargeForOracle(f"total mass {multiset.total_mass} exceeds the oracle cap of {ORACLE_MAX_MASS}")


def brute_force_table(tree: WeightedTree, multiset: VertexMultiset) -> OracleTable:
    """
    Enumerate all count vectors (lexicographic order, first one kept on ties) and record the
    best MAX and MIN value for every side-A size.

    Raises:
        InstanceTooLargeForOracle: total mass above ORACLE_MAX_MASS
    """
    _check_oracle_size(multiset)
    support = multiset.support()
    m = multiset.total_mass
    mult = np.array([multiset.mass(v) for v in support], dtype=np.int64)
    distances = np.array([[all_distances_from(tree, u)[v] for v in support] for u in support], dtype=np.float64).reshape(len(support), len(support))

    best_max = [-math.inf] * (m + 1)
    best_min = [math.inf] * (m + 1)
    index_max = [-1] * (m + 1)
    index_min = [-1] * (m + 1)
    enumerated = 0

    vectors = itertools.product(*(range(count + 1) for count in mult.tolist()))
    while True:
        chunk = list(itertools.islice(vectors, CHUNK_SIZE))
        if not chunk:
            break
        side_a = np.array(chunk, dtype=np.int64).reshape(len(chunk), len(support))
        side_b = mult[None, :] - side_a
        values = np.einsum("ij,jk,ik->i", side_a, distances, side_b)
        sizes = side_a.sum(axis=1)
        for k in np.unique(sizes).tolist():
            rows = np.flatnonzero(sizes == k)
            top = rows[int(np.argmax(values[rows]))]
            low = rows[int(np.argmin(values[rows]))]
            if values[top] > best_max[k]:
                best_max[k], index_max[k] = float(values[top]), enumerated + int(top)
            if values[low] < best_min[k]:
                best_min[k], index_min[k] = float(values[low]), enumerated + int(low)
        enumerated += len(chunk)

    expected = math.prod(count + 1 for count in mult.tolist())
    assert enumerated == expected, f"enumerated {enumerated} count vectors, expected {expected}"

    print(f"[DEBUG] [{PRINT_PREFIX}] Enumerated {enumerated} count vectors for m={m}")
    return OracleTable(
        support=support,
        best_max=best_max,
        best_min=best_min,
        witness_max=[_vector_at(mult, i) for i in index_max],
        witness_min=[_vector_at(mult, i) for i in index_min],
        index_max=index_max,
        index_min=index_min,
        enumerated=enumerated,
    )


def _vector_at(mult: np.ndarray, index: int) -> tuple[int, ...]:
    """Count vector at a position of the lexicographic enumeration (mixed radix, last digit fastest)."""
    digits = []
    for count in reversed(mult.tolist()):
        index, digit = divmod(index, count + 1)
        digits.append(digit)
    return tuple(reversed(digits))


def _to_partition(multiset: VertexMultiset, support: list[int], vector: tuple[int, ...]) -> Partition:
    side_a = dict(zip(support, vector))
    return Partition(side_a=side_a, side_b={v: multiset.mass(v) - side_a[v] for v in support})


def brute_force_optimum(tree: WeightedTree, multiset: VertexMultiset, spec: ProblemSpec) -> tuple[float, Partition]:
    """
    Optimal value of a problem variant and the lexicographically smallest optimal count vector.

    Raises:
        InstanceTooLargeForOracle, OddMassForBisection, KOutOfRange
    """
    _check_oracle_size(multiset)
    k = spec.resolve_k(multiset.total_mass)
    table = brute_force_table(tree, multiset)
    maximize = spec.objective is Objective.MAXIMIZE
    best = table.best_max if maximize else table.best_min
    index = table.index_max if maximize else table.index_min
    witnesses = table.witness_max if maximize else table.witness_min

    if k is None:
        target = max(best) if maximize else min(best)
        k = min((index[j], j) for j in range(len(best)) if best[j] == target)[1]

    witness = _to_partition(multiset, table.support, witnesses[k])
    value = cut_value_pairwise(tree, multiset, witness)
    return value, witness


def direct_subproblem_value(instance: NormalizedInstance, v: int, p: int, s: int, objective: Objective) -> float:
    """
    Optimum of the subproblem at v straight from its definition: over all splits of the copies
    below v into p on side A and q on side B, the A x B distances inside the subtree plus t times
    the A-to-v distances plus s times the B-to-v distances, where t = (m - c_v) - s.

    Raises:
        InstanceTooLargeForOracle: subtree mass above SUBPROBLEM_MAX_MASS
        KOutOfRange: p or s outside its range
    """
    c = instance.subtree_mass[v]
    m = instance.total_mass
    if c > SUBPROBLEM_MAX_MASS:
        raise InstanceTooLargeForOracle(f"subtree mass {c} exceeds the subproblem cap of {SUBPROBLEM_MAX_MASS}")
    if not 0 <= p <= c or not 0 <= s <= m - c:
        raise KOutOfRange(f"cell (p={p}, s={s}) is outside 0..{c} x 0..{m - c}")
    t = (m - c) - s

    leaves = [leaf for leaf in instance.leaves_below(v) if instance.leaf_mass[leaf] > 0]
    mult = [instance.leaf_mass[leaf] for leaf in leaves]
    to_v = [instance.distance(leaf, v) for leaf in leaves]
    between = [[instance.distance(x, y) for y in leaves] for x in leaves]

    maximize = objective is Objective.MAXIMIZE
    best = -math.inf if maximize else math.inf
    for side_a in itertools.product(*(range(count + 1) for count in mult)):
        if sum(side_a) != p:
            continue
        side_b = [count - a for count, a in zip(mult, side_a)]
        value = math.fsum(
            [side_a[i] * side_b[j] * between[i][j] for i in range(len(leaves)) for j in range(len(leaves))]
            + [t * side_a[i] * to_v[i] for i in range(len(leaves))]
            + [s * side_b[i] * to_v[i] for i in range(len(leaves))]
        )
        best = max(best, value) if maximize else min(best, value)
    return best
