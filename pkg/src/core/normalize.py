# src\core\normalize.py
# Rooting, leaf relocation and binarization of a weighted tree with a vertex multiset.
# The result is a rooted binary tree whose multiset mass sits only at leaves and whose
# metric on the original vertices is unchanged.

PRINT_PREFIX = "CORE - NORMALIZE"

# Standard library imports
from dataclasses import dataclass

# Local imports
from .multiset import VertexMultiset
from .tree import WeightedTree


@dataclass(frozen=True)
class NormalizedInstance:
    """
    Rooted binary tree produced by normalize().

    Vertices 0..original_count-1 are the original vertices; pendants and dummies follow.
    parent[root] is -1 and parent_weight[root] is 0.
    """
    root: int
    original_count: int
    parent: tuple[int, ...]
    parent_weight: tuple[float, ...]
    children: tuple[tuple[int, ...], ...]
    leaf_mass: tuple[int, ...]
    origin: tuple[int, ...]
    subtree_mass: tuple[int, ...]
    is_pendant: tuple[bool, ...]
    post_order: tuple[int, ...]
    depth: tuple[float, ...]
    level: tuple[int, ...]
    dummy_count: int
    pendant_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.parent)

    @property
    def total_mass(self) -> int:
        return self.subtree_mass[self.root]

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def distance(self, u: int, v: int) -> float:
        """Distance through the lowest common ancestor, computed from root depths."""
        a, b = u, v
        while self.level[a] > self.level[b]:
            a = self.parent[a]
        while self.level[b] > self.level[a]:
            b = self.parent[b]
        while a != b:
            a, b = self.parent[a], self.parent[b]
        return self.depth[u] + self.depth[v] - 2 * self.depth[a]

    def to_weighted_tree(self) -> WeightedTree:
        edges = tuple((self.parent[v], v, self.parent_weight[v]) for v in range(self.vertex_count) if v != self.root)
        return WeightedTree(vertex_count=self.vertex_count, edges=edges)

    def leaves_below(self, v: int) -> list[int]:
        """Leaves of the subtree rooted at v, in depth-first order."""
        found: list[int] = []
        stack = [v]
        while stack:
            x = stack.pop()
            if self.children[x]:
                stack.extend(reversed(self.children[x]))
            else:
                found.append(x)
        return found


def _root_tree(tree: WeightedTree, root: int) -> tuple[list[int], list[float], list[list[int]]]:
    """Breadth-first rooting; children are kept in increasing id order."""
    n = tree.vertex_count
    parent = [-1] * n
    parent_weight = [0.0] * n
    children: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    visited[root] = True
    frontier = [root]
    while frontier:
        next_frontier = []
        for u in frontier:
            for v in sorted(tree.graph.adj[u]):
                if visited[v]:
                    continue
                visited[v] = True
                parent[v] = u
                parent_weight[v] = float(tree.graph.adj[u][v]["weight"])
                children[u].append(v)
                next_frontier.append(v)
        frontier = next_frontier
    return parent, parent_weight, children


def normalize(tree: WeightedTree, multiset: VertexMultiset, root: int = 0) -> NormalizedInstance:
    """
    Root the tree, move the mass of internal vertices to zero-weight pendant leaves and
    binarize vertices with more than two children through chains of zero-weight dummies.

    Args:
        tree: validated tree
        multiset: validated multiset on the tree's vertices
        root: original vertex to root at
    Returns:
        NormalizedInstance
    """
    tree.check_vertex(root)
    n = tree.vertex_count
    parent, parent_weight, children = _root_tree(tree, root)
    leaf_mass = [0] * n
    origin = list(range(n))
    is_pendant = [False] * n

    def add_vertex(at_parent: int, weight: float, mass: int, source: int, pendant: bool) -> int:
        parent.append(at_parent)
        parent_weight.append(weight)
        children.append([])
        leaf_mass.append(mass)
        origin.append(source)
        is_pendant.append(pendant)
        return len(parent) - 1

    # Leaf relocation
    pendant_count = 0
    for v in range(n):
        mass = multiset.mass(v)
        if mass == 0:
            continue
        if children[v]:
            pendant = add_vertex(v, 0.0, mass, v, True)
            children[v].append(pendant)
            pendant_count += 1
        else:
            leaf_mass[v] = mass

    # Binarization: v keeps its first child, the rest hang from a chain of dummies
    dummy_count = 0
    for v in range(len(parent)):
        if len(children[v]) <= 2:
            continue
        kids = children[v]
        children[v] = kids[:1]
        attach = v
        for child in kids[1:-2]:
            dummy = add_vertex(attach, 0.0, 0, origin[v], False)
            children[attach].append(dummy)
            children[dummy].append(child)
            parent[child] = dummy
            attach = dummy
        dummy = add_vertex(attach, 0.0, 0, origin[v], False)
        children[attach].append(dummy)
        for child in kids[-2:]:
            children[dummy].append(child)
            parent[child] = dummy
        dummy_count += len(kids) - 2

    total = len(parent)

    # Post-order, subtree masses and root depths
    post_order: list[int] = []
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            post_order.append(v)
            continue
        stack.append((v, True))
        for child in reversed(children[v]):
            stack.append((child, False))

    subtree_mass = [0] * total
    for v in post_order:
        subtree_mass[v] = leaf_mass[v] + sum(subtree_mass[c] for c in children[v])

    depth = [0.0] * total
    level = [0] * total
    for v in reversed(post_order):
        if v != root:
            depth[v] = depth[parent[v]] + parent_weight[v]
            level[v] = level[parent[v]] + 1

    print(f"[DEBUG] [{PRINT_PREFIX}] Normalized {n} vertices into {total} (dummies={dummy_count}, pendants={pendant_count}, root={root})")

    return NormalizedInstance(
        root=root,
        original_count=n,
        parent=tuple(parent),
        parent_weight=tuple(parent_weight),
        children=tuple(tuple(c) for c in children),
        leaf_mass=tuple(leaf_mass),
        origin=tuple(origin),
        subtree_mass=tuple(subtree_mass),
        is_pendant=tuple(is_pendant),
        post_order=tuple(post_order),
        depth=tuple(depth),
        level=tuple(level),
        dummy_count=dummy_count,
        pendant_count=pendant_count,
    )
