# src\solver\dp.py
# Bottom-up solve over a normalized instance and partition reconstruction by backtracking

PRINT_PREFIX = "SOLVER - DP"

# Standard library imports
import time
from dataclasses import dataclass, field

# Third-party imports
import numpy as np

# Local imports
from src.core.errors import KOutOfRange
from src.core.multiset import Partition
from src.core.normalize import NormalizedInstance
from . import transitions
from .spec import Objective, ProblemSpec
from .table import DPTable, TransitionStats

TIE_BREAK_POLICY = "smallest-p1" # Also: ANY_SPLIT picks the smallest optimal k


@dataclass
class SolveResult:
    spec: ProblemSpec
    k: int
    value: float
    partition: Partition
    opt_values: np.ndarray # opt_k for k = 0..m
    table: DPTable
    timings_ms: dict[str, float] = field(default_factory=dict)

    @property
    def stats(self) -> TransitionStats:
        return self.table.stats


def build_table(instance: NormalizedInstance, objective: Objective) -> DPTable:
    """
    Fill the DP table for every vertex, children before parents.
    One pass yields opt_k for every k at the root.
    """
    count = instance.vertex_count
    table = DPTable(instance=instance, objective=objective, values=[None] * count, choices=[None] * count)
    stats = table.stats

    for v in instance.post_order:
        kids = instance.children[v]
        if not kids:
            values, choices = transitions.base_case_leaf(instance, v)
            stats.leaf_rows += 1
        elif len(kids) == 1:
            values, choices = transitions.one_child_row(instance, v, table.values[kids[0]])
            stats.one_child_rows += 1
        else:
            values, choices = transitions.two_child_row(instance, v, (table.values[kids[0]], table.values[kids[1]]), objective)
            if instance.is_pendant[kids[0]] or instance.is_pendant[kids[1]]:
                stats.pendant_merges += 1
            else:
                stats.two_child_rows += 1
        table.values[v] = values
        table.choices[v] = choices

    print(f"[DEBUG] [{PRINT_PREFIX}] Filled {table.cell_count()} cells ({objective.value}) over {count} vertices: {stats.as_dict()}")
    return table


def solve_all(instance: NormalizedInstance, objective: Objective) -> tuple[DPTable, np.ndarray]:
    """One table per objective: the filled table and opt_k for every k = 0..m."""
    table = build_table(instance, objective)
    return table, table.root_values()


def backtrack(table: DPTable, k: int) -> Partition:
    """
    Walk the backpointers from the root cell (k, 0) and collect side counts per original vertex.

    Raises:
        KOutOfRange: k outside 0..m
    """
    instance = table.instance
    m = instance.total_mass
    if not 0 <= k <= m:
        raise KOutOfRange(f"k={k} is outside 0..{m}")

    side_a: dict[int, int] = {}
    side_b: dict[int, int] = {}
    stack = [(instance.root, k, 0)]
    while stack:
        v, p, s = stack.pop()
        kids = instance.children[v]
        if not kids:
            mass = instance.leaf_mass[v]
            if mass:
                source = instance.origin[v]
                side_a[source] = side_a.get(source, 0) + p
                side_b[source] = side_b.get(source, 0) + (mass - p)
        elif len(kids) == 1:
            stack.append((kids[0], p, s))
        else:
            p1 = int(table.choices[v][p, s])
            p2 = p - p1
            stack.append((kids[0], p1, s + p2))
            stack.append((kids[1], p2, s + p1))

    return Partition(side_a=dict(sorted(side_a.items())), side_b=dict(sorted(side_b.items())))


def pick_k(opt_values: np.ndarray, objective: Objective) -> int:
    """Smallest k attaining the best opt_k."""
    return int(np.argmax(opt_values) if objective is Objective.MAXIMIZE else np.argmin(opt_values))


def solve(instance: NormalizedInstance, spec: ProblemSpec) -> SolveResult:
    """
    Solve one problem variant on a normalized instance.

    Raises:
        OddMassForBisection, KOutOfRange: the problem cannot be met by this instance
    """
    k = spec.resolve_k(instance.total_mass)

    started = time.perf_counter()
    table, opt_values = solve_all(instance, spec.objective)
    solved = time.perf_counter()

    if k is None:
        k = pick_k(opt_values, spec.objective)
    partition = backtrack(table, k)
    finished = time.perf_counter()

    print(f"[INFO] [{PRINT_PREFIX}] Solved {spec.objective.value}/{spec.constraint.value} with k={k}: value {opt_values[k]}")
    return SolveResult(
        spec=spec,
        k=k,
        value=float(opt_values[k]),
        partition=partition,
        opt_values=opt_values,
        table=table,
        timings_ms={"solve": (solved - started) * 1000.0, "backtrack": (finished - solved) * 1000.0},
    )
