# src\core\tree.py
# Weighted tree model, validation and tree-metric distances

PRINT_PREFIX = "CORE - TREE"

# Standard library imports
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

# Third-party imports
import networkx as nx
from networkx.utils import UnionFind

# Local imports
from .errors import BadVertexId, CycleDetected, DisconnectedGraph, NegativeWeight, TreeValidationError

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class WeightedTree:
    """
    A tree on vertices 0..vertex_count-1 with nonnegative edge weights.
    Build it through validate_tree; the constructor itself does not check the invariants.

    labels optionally records what each vertex stands for (coordinates for line instances).
    """
    vertex_count: int
    edges: tuple[Edge, ...]
    labels: tuple[float, ...] | None = None

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_weighted_edges_from(self.edges)
        return graph

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.vertex_count:
            raise BadVertexId(f"vertex {v!r} is not in 0..{self.vertex_count - 1}")

    def total_weight(self) -> float:
        return math.fsum(w for _, _, w in self.edges)


def validate_tree(vertex_count: int, edges: Iterable[Sequence]) -> WeightedTree:
    """
    Validate a raw vertex count and edge list and build a WeightedTree.

    Args:
        vertex_count: number of vertices n, ids are 0..n-1
        edges: (u, v, w) triples, exactly n-1 of them
    Returns:
        WeightedTree: the validated tree
    Raises:
        BadVertexId, NegativeWeight, CycleDetected, DisconnectedGraph
    """
    if not isinstance(vertex_count, int) or isinstance(vertex_count, bool) or vertex_count < 1:
        raise TreeValidationError(f"vertex count must be a positive integer, got {vertex_count!r}")

    components = UnionFind(range(vertex_count))
    seen: set[tuple[int, int]] = set()
    checked: list[Edge] = []

    for raw in edges:
        if len(raw) != 3:
            raise TreeValidationError(f"edge {tuple(raw)!r} must be a (u, v, w) triple")
        u, v, w = raw
        for endpoint in (u, v):
            if not isinstance(endpoint, int) or isinstance(endpoint, bool) or not 0 <= endpoint < vertex_count:
                raise BadVertexId(f"edge ({u}, {v}) uses vertex {endpoint!r} outside 0..{vertex_count - 1}")
        try:
            w = float(w)
        except (TypeError, ValueError):
            raise NegativeWeight(f"edge ({u}, {v}) has non-numeric weight {w!r}")
        if not math.isfinite(w) or w < 0:
            raise NegativeWeight(f"edge ({u}, {v}) has weight {w}, weights must be finite and >= 0")
        if u == v:
            raise CycleDetected(f"self-loop at vertex {u}")

        key = (min(u, v), max(u, v))
        if key in seen:
            raise CycleDetected(f"duplicate edge ({u}, {v})")
        seen.add(key)

        if components[u] == components[v]:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        components.union(u, v)
        checked.append((u, v, w))

    if len(checked) != vertex_count - 1:
        raise DisconnectedGraph(f"{vertex_count} vertices need {vertex_count - 1} edges to be connected, got {len(checked)}")

    return WeightedTree(vertex_count=vertex_count, edges=tuple(checked))


def tree_distance(tree: WeightedTree, u: int, v: int) -> float:
    """Sum of edge weights on the unique u-v path."""
    tree.check_vertex(u)
    tree.check_vertex(v)
    if u == v:
        return 0.0
    return float(nx.shortest_path_length(tree.graph, u, v, weight="weight"))


def all_distances_from(tree: WeightedTree, u: int) -> dict[int, float]:
    """Distances from u to every vertex of the tree."""
    tree.check_vertex(u)
    return {v: float(d) for v, d in nx.single_source_dijkstra_path_length(tree.graph, u, weight="weight").items()}


def diameter(tree: WeightedTree) -> float:
    """Largest distance between two vertices (two sweeps, exact on trees)."""
    first = all_distances_from(tree, 0)
    far = max(first, key=lambda v: (first[v], -v))
    return max(all_distances_from(tree, far).values())
