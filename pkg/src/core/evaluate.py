# src\core\evaluate.py
# Cut value evaluators: the pairwise definition and the per-edge regrouping of the same sum

PRINT_PREFIX = "CORE - EVALUATE"

# Standard library imports
import math

# Local imports
from .multiset import Partition, VertexMultiset, check_partition
from .tree import WeightedTree, all_distances_from


def cut_value_pairwise(tree: WeightedTree, multiset: VertexMultiset, partition: Partition) -> float:
    """
    Sum of tree distances over all cross pairs (one copy on side A, one on side B).
    Copies sitting on the same vertex contribute 0 to each other.

    Raises:
        PartitionMassMismatch: partition does not split the multiset
    """
    check_partition(multiset, partition)
    side_b = [(v, count) for v, count in sorted(partition.side_b.items()) if count > 0]
    terms: list[float] = []
    for u, a_count in sorted(partition.side_a.items()):
        if a_count == 0:
            continue
        distances = all_distances_from(tree, u)
        terms.extend(a_count * b_count * distances[v] for v, b_count in side_b)
    return math.fsum(terms)


def cut_value_edge_decomposition(tree: WeightedTree, multiset: VertexMultiset, partition: Partition) -> float:
    """
    Same value as cut_value_pairwise, regrouped by edge in one traversal:
    an edge e with x_e side-A and y_e side-B copies below it carries
    w(e) * (x_e * (kB - y_e) + y_e * (kA - x_e)).

    Raises:
        PartitionMassMismatch: partition does not split the multiset
    """
    check_partition(multiset, partition)
    size_a, size_b = partition.size_a, partition.size_b
    graph = tree.graph

    # Iterative depth-first order from vertex 0, then accumulate bottom-up
    order: list[int] = []
    parent = {0: -1}
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        for v in graph.adj[u]:
            if v not in parent:
                parent[v] = u
                stack.append(v)

    below_a = {v: partition.side_a.get(v, 0) for v in order}
    below_b = {v: partition.side_b.get(v, 0) for v in order}
    terms: list[float] = []
    for v in reversed(order):
        u = parent[v]
        if u < 0:
            continue
        x, y = below_a[v], below_b[v]
        terms.append(graph.adj[u][v]["weight"] * (x * (size_b - y) + y * (size_a - x)))
        below_a[u] += x
        below_b[u] += y
    return math.fsum(terms)
