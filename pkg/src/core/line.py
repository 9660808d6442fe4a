# src\core\line.py
# Points on the real line as a path tree, plus threshold cuts as a baseline

PRINT_PREFIX = "CORE - LINE"

# Standard library imports
import math
import numbers
from collections import Counter
from typing import Iterable, Mapping

# Local imports
from .errors import EmptyInput, InvalidMultiplicity, KOutOfRange, NonFiniteCoordinate
from .evaluate import cut_value_edge_decomposition
from .multiset import Partition, VertexMultiset
from .tree import WeightedTree


def _point_counts(points: Iterable[float] | Mapping[float, int]) -> Counter:
    counts: Counter = Counter()
    items = points.items() if isinstance(points, Mapping) else ((p, 1) for p in points)
    for coordinate, count in items:
        try:
            value = float(coordinate)
        except (TypeError, ValueError):
            raise NonFiniteCoordinate(f"coordinate {coordinate!r} is not a number")
        if not math.isfinite(value):
            raise NonFiniteCoordinate(f"coordinate {coordinate!r} is not finite")
        if isinstance(count, bool) or not isinstance(count, numbers.Integral) or count < 1:
            raise InvalidMultiplicity(f"coordinate {coordinate!r} has count {count!r}, expected an integer >= 1")
        counts[value] += int(count)
    return counts


def line_to_tree(points: Iterable[float] | Mapping[float, int]) -> tuple[WeightedTree, VertexMultiset]:
    """
    Build the path tree of a multiset of reals.

    Vertices are the distinct coordinates in increasing order, consecutive ones joined by an
    edge weighted with their difference. Duplicates collapse into multiplicities.

    Args:
        points: the coordinates, or a coordinate -> count map
    Returns:
        (WeightedTree, VertexMultiset): tree.labels holds the coordinate of every vertex
    Raises:
        EmptyInput, NonFiniteCoordinate, InvalidMultiplicity
    """
    counts = _point_counts(points)
    if not counts or sum(counts.values()) == 0:
        raise EmptyInput("no points given")
    coordinates = sorted(counts)
    span = coordinates[-1] - coordinates[0]
    if not math.isfinite(span):
        raise NonFiniteCoordinate(f"coordinates span {coordinates[0]!r}..{coordinates[-1]!r}, which overflows a float distance")
    edges = tuple((i, i + 1, coordinates[i + 1] - coordinates[i]) for i in range(len(coordinates) - 1))
    tree = WeightedTree(vertex_count=len(coordinates), edges=edges, labels=tuple(coordinates))
    multiset = VertexMultiset(masses={i: counts[c] for i, c in enumerate(coordinates)})
    print(f"[DEBUG] [{PRINT_PREFIX}] Built path of {len(coordinates)} distinct coordinates carrying {multiset.total_mass} points")
    return tree, multiset


def threshold_partitions(multiset: VertexMultiset, k: int) -> list[Partition]:
    """
    The two threshold cuts of a path instance with k copies on side A:
    the k lowest points on side A, or the k highest.
    """
    m = multiset.total_mass
    if not 0 <= k <= m:
        raise KOutOfRange(f"k={k} is outside 0..{m}")

    def lowest(count: int, order: list[int]) -> dict[int, int]:
        taken: dict[int, int] = {}
        for v in order:
            take = min(count, multiset.mass(v))
            taken[v] = take
            count -= take
        return taken

    support = multiset.support()
    partitions = []
    for order in (support, list(reversed(support))):
        side_a = lowest(k, order)
        partitions.append(Partition(
            side_a={v: side_a[v] for v in support},
            side_b={v: multiset.mass(v) - side_a[v] for v in support},
        ))
    return partitions


def threshold_cut(tree: WeightedTree, multiset: VertexMultiset, k: int, maximize: bool) -> tuple[float, Partition]:
    """Best threshold cut with side sizes (k, m-k) on a path instance built by line_to_tree."""
    scored = [(cut_value_edge_decomposition(tree, multiset, p), p) for p in threshold_partitions(multiset, k)]
    pick = max if maximize else min
    return pick(scored, key=lambda item: item[0])
