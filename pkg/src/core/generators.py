# src\core\generators.py
# Seeded random instance families for gen, verify and bench

PRINT_PREFIX = "CORE - GENERATORS"

# Third-party imports
import numpy as np

# Local imports
from .errors import SolverError
from .multiset import VertexMultiset, validate_multiset
from .tree import WeightedTree, validate_tree

FAMILIES: tuple[str, ...] = ("random-tree", "path", "star", "caterpillar")


def _parents(family: str, n: int, rng: np.random.Generator) -> list[int]:
    """Parent of each vertex 1..n-1 under the family's shape."""
    if family == "random-tree":
        # Uniform random parent among the earlier vertices
        return [int(rng.integers(0, i)) for i in range(1, n)]
    if family == "path":
        return list(range(0, n - 1))
    if family == "star":
        return [0] * (n - 1)
    if family == "caterpillar":
        spine = (n + 1) // 2
        parents = list(range(0, spine - 1))
        parents += [i for i in range(n - spine)]
        return parents
    raise SolverError(f"unknown instance family '{family}', expected one of {', '.join(FAMILIES)}")


def generate_instance(
    family: str,
    n: int,
    seed: int,
    max_weight: int = 10,
    max_mult: int = 1,
) -> tuple[WeightedTree, VertexMultiset]:
    """
    Deterministic instance for (family, n, seed, max_weight, max_mult).

    Weights are uniform integers in [0, max_weight]; every vertex carries a multiplicity
    uniform in [1, max_mult].
    """
    if n < 1:
        raise SolverError(f"n must be >= 1, got {n}")
    if max_weight < 0:
        raise SolverError(f"max weight must be >= 0, got {max_weight}")
    if max_mult < 1:
        raise SolverError(f"max multiplicity must be >= 1, got {max_mult}")
    rng = np.random.default_rng(seed)
    parents = _parents(family, n, rng)
    weights = rng.integers(0, max_weight + 1, size=n - 1)
    edges = [(parents[i - 1], i, int(weights[i - 1])) for i in range(1, n)]
    tree = validate_tree(n, edges)
    masses = rng.integers(1, max_mult + 1, size=n)
    multiset = validate_multiset(tree, {v: int(masses[v]) for v in range(n)})
    return tree, multiset


def generate_trial(
    seed: int,
    trial: int,
    max_n: int,
    max_weight: int,
    max_mult: int,
    max_mass: int,
) -> tuple[WeightedTree, VertexMultiset]:
    """
    Random verification instance number `trial` of a seeded batch: a random tree with
    n uniform in [1, max_n] whose masses are cut back until the total is at most max_mass.
    Vertices may end up carrying no copies.
    """
    rng = np.random.default_rng([seed, trial])
    n = int(rng.integers(1, max_n + 1))
    tree, multiset = generate_instance("random-tree", n, int(rng.integers(0, 2**31)), max_weight, max_mult)
    masses = dict(multiset.masses)
    while sum(masses.values()) > max_mass:
        v = int(rng.choice(sorted(masses)))
        masses[v] -= 1
        if masses[v] == 0:
            del masses[v]
    return tree, VertexMultiset(masses=dict(sorted(masses.items())))
