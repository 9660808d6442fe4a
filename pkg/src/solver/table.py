# src\solver\table.py
# DP table over the reduced index (v, p, s) with backpointers

PRINT_PREFIX = "SOLVER - TABLE"

# Standard library imports
from dataclasses import dataclass, field

# Third-party imports
import numpy as np

# Local imports
from src.core.normalize import NormalizedInstance
from .spec import Objective

LEAF_MARKER = -1 # Backpointer of leaf cells


@dataclass
class TransitionStats:
    """How many vertex rows each transition kind produced."""
    leaf_rows: int = 0
    one_child_rows: int = 0
    two_child_rows: int = 0
    pendant_merges: int = 0 # Two-child rows where one child is a relocation pendant

    def as_dict(self) -> dict[str, int]:
        return {
            "leaf_rows": self.leaf_rows,
            "one_child_rows": self.one_child_rows,
            "two_child_rows": self.two_child_rows,
            "pendant_merges": self.pendant_merges,
        }


@dataclass
class DPTable:
    """
    values[v][p, s] is mc(v, p, q, s, t) with q = c_v - p and t = (m - c_v) - s, where c_v is the
    subtree mass of v: p copies of the subtree on side A, s copies outside it on side A.
    choices[v][p, s] is the child-1 share p1 picked by the transition (LEAF_MARKER at leaves).
    """
    instance: NormalizedInstance
    objective: Objective
    values: list[np.ndarray | None]
    choices: list[np.ndarray | None]
    stats: TransitionStats = field(default_factory=TransitionStats)

    @property
    def total_mass(self) -> int:
        return self.instance.total_mass

    def value(self, v: int, p: int, s: int) -> float:
        return float(self.values[v][p, s])

    def root_values(self) -> np.ndarray:
        """opt_k for k = 0..m, the root row at s = 0."""
        return self.values[self.instance.root][:, 0].copy()

    def cell_count(self) -> int:
        return sum(row.size for row in self.values if row is not None)


def choice_dtype(total_mass: int) -> type:
    """Smallest backpointer dtype able to hold 0..m and the leaf marker."""
    return np.int16 if total_mass < 2**15 else np.int32
