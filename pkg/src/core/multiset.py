# src\core\multiset.py
# Vertex multisets and two-sided partitions of them

PRINT_PREFIX = "CORE - MULTISET"

# Standard library imports
from dataclasses import dataclass, field
from typing import Mapping

# Local imports
from .errors import BadVertexId, InvalidMultiplicity, PartitionMassMismatch
from .tree import WeightedTree


@dataclass(frozen=True)
class VertexMultiset:
    """Multiplicity per vertex. Vertices without copies are not keyed."""
    masses: Mapping[int, int] = field(default_factory=dict)

    @property
    def total_mass(self) -> int:
        return sum(self.masses.values())

    def mass(self, v: int) -> int:
        return self.masses.get(v, 0)

    def support(self) -> list[int]:
        return sorted(self.masses)


def validate_multiset(tree: WeightedTree, masses: Mapping[int, int]) -> VertexMultiset:
    """
    Check a raw vertex -> multiplicity map against its tree.

    Raises:
        BadVertexId: a keyed vertex is not in the tree
        InvalidMultiplicity: a count is not an integer >= 1
    """
    checked: dict[int, int] = {}
    for v, count in masses.items():
        tree.check_vertex(v)
        if not isinstance(count, int) or isinstance(count, bool) or count < 1:
            raise InvalidMultiplicity(f"vertex {v} has multiplicity {count!r}, expected an integer >= 1")
        checked[v] = count
    return VertexMultiset(masses=dict(sorted(checked.items())))


@dataclass(frozen=True)
class Partition:
    """Per-vertex counts on side A and side B."""
    side_a: Mapping[int, int]
    side_b: Mapping[int, int]

    @property
    def size_a(self) -> int:
        return sum(self.side_a.values())

    @property
    def size_b(self) -> int:
        return sum(self.side_b.values())

    def swapped(self) -> "Partition":
        return Partition(side_a=self.side_b, side_b=self.side_a)

    def counts(self, v: int) -> tuple[int, int]:
        return self.side_a.get(v, 0), self.side_b.get(v, 0)

    def to_rows(self) -> list[dict]:
        """Vertex-sorted rows, the shape used by reports."""
        vertices = sorted(set(self.side_a) | set(self.side_b))
        return [{"vertex": v, "a": self.side_a.get(v, 0), "b": self.side_b.get(v, 0)} for v in vertices]


def partition_from_side_a(multiset: VertexMultiset, side_a: Mapping[int, int]) -> Partition:
    """Build the partition that puts side_a[v] copies of v on side A and the rest on side B."""
    vertices = sorted(set(multiset.masses) | set(side_a))
    a = {v: side_a.get(v, 0) for v in vertices}
    b = {v: multiset.mass(v) - a[v] for v in vertices}
    partition = Partition(side_a=a, side_b=b)
    check_partition(multiset, partition)
    return partition


def check_partition(multiset: VertexMultiset, partition: Partition) -> None:
    """
    Raises PartitionMassMismatch unless a_v + b_v equals the multiplicity of v for every vertex
    and no count is negative.
    """
    for v in set(partition.side_a) | set(partition.side_b) | set(multiset.masses):
        a, b = partition.counts(v)
        if a < 0 or b < 0:
            raise PartitionMassMismatch(f"vertex {v} has negative side count ({a}, {b})")
        if a + b != multiset.mass(v):
            raise PartitionMassMismatch(f"vertex {v} splits {a} + {b} copies but has multiplicity {multiset.mass(v)}")
