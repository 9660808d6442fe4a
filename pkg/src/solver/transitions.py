# src\solver\transitions.py
# Cell recurrences of the tree DP and their whole-row vectorized forms.
#
# Under normalization internal vertices carry no copies, so a vertex with subtree mass c splits
# its p side-A copies only among its children. With t = (m - c) - s outside copies on side B:
#
#   one child v1 (weight w1):
#     mc(v1, p, s) + p*t*w1 + q*s*w1
#   two children v1, v2 (weights w1, w2), p = p1 + p2:
#     mc(v1, p1, s+p2) + mc(v2, p2, s+p1) + (p1*q2 + p2*q1)*(w1 + w2)
#       + (p1*w1 + p2*w2)*t + (q1*w1 + q2*w2)*s

PRINT_PREFIX = "SOLVER - TRANSITIONS"

# Third-party imports
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

# Local imports
from src.core.normalize import NormalizedInstance
from .spec import Objective
from .table import LEAF_MARKER, choice_dtype


def base_case_leaf(instance: NormalizedInstance, v: int) -> tuple[np.ndarray, np.ndarray]:
    """A leaf row is identically 0: copies on a leaf are at distance 0 from each other and from v."""
    c = instance.subtree_mass[v]
    m = instance.total_mass
    values = np.zeros((c + 1, m - c + 1), dtype=np.float64)
    choices = np.full(values.shape, LEAF_MARKER, dtype=choice_dtype(m))
    return values, choices


def transition_one_child(instance: NormalizedInstance, v: int, p: int, s: int, child_values: np.ndarray) -> tuple[float, int]:
    """Value of cell (v, p, s) when v has a single child; the backpointer is p itself."""
    c = instance.subtree_mass[v]
    m = instance.total_mass
    w1 = instance.parent_weight[instance.children[v][0]]
    q, t = c - p, (m - c) - s
    return float(child_values[p, s]) + p * t * w1 + q * s * w1, p


def transition_two_children(
    instance: NormalizedInstance,
    v: int,
    p: int,
    s: int,
    child_values: tuple[np.ndarray, np.ndarray],
    objective: Objective,
) -> tuple[float, int]:
    """Value of cell (v, p, s) when v has two children, and the smallest optimal p1."""
    v1, v2 = instance.children[v]
    c1, c2 = instance.subtree_mass[v1], instance.subtree_mass[v2]
    w1, w2 = instance.parent_weight[v1], instance.parent_weight[v2]
    m = instance.total_mass
    t = (m - c1 - c2) - s
    best_value, best_p1 = None, None
    for p1 in range(max(0, p - c2), min(c1, p) + 1):
        p2 = p - p1
        q1, q2 = c1 - p1, c2 - p2
        value = (
            float(child_values[0][p1, s + p2])
            + float(child_values[1][p2, s + p1])
            + (p1 * q2 + p2 * q1) * (w1 + w2)
            + (p1 * w1 + p2 * w2) * t
            + (q1 * w1 + q2 * w2) * s
        )
        if best_value is None or (value > best_value if objective is Objective.MAXIMIZE else value < best_value):
            best_value, best_p1 = value, p1
    return best_value, best_p1


def one_child_row(instance: NormalizedInstance, v: int, child_values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Whole table of a one-child vertex, same shape as the child's."""
    c = instance.subtree_mass[v]
    m = instance.total_mass
    w1 = instance.parent_weight[instance.children[v][0]]
    p = np.arange(c + 1)[:, None]
    s = np.arange(m - c + 1)[None, :]
    q, t = c - p, (m - c) - s
    values = child_values + p * t * w1 + q * s * w1
    choices = np.broadcast_to(p, values.shape).astype(choice_dtype(m))
    return values, choices


def two_child_row(
    instance: NormalizedInstance,
    v: int,
    child_values: tuple[np.ndarray, np.ndarray],
    objective: Objective,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Whole table of a two-child vertex.

    Loops over the side-A share of the lighter child and handles every share of the heavier
    child and every s at once. Shares are visited so that child 1's share p1 increases, and only
    strict improvements replace a cell, which keeps the smallest optimal p1 on ties.
    """
    v1, v2 = instance.children[v]
    c1, c2 = instance.subtree_mass[v1], instance.subtree_mass[v2]
    w1, w2 = instance.parent_weight[v1], instance.parent_weight[v2]
    m = instance.total_mass
    c = c1 + c2
    width = m - c + 1
    maximize = objective is Objective.MAXIMIZE

    values = np.full((c + 1, width), -np.inf if maximize else np.inf)
    choices = np.zeros((c + 1, width), dtype=choice_dtype(m))
    s = np.arange(width)[None, :]
    t = (m - c) - s

    light_is_first = c1 <= c2
    c_light, c_heavy = (c1, c2) if light_is_first else (c2, c1)
    light_table, heavy_table = child_values if light_is_first else child_values[::-1]
    heavy_shares = np.arange(c_heavy + 1)[:, None]
    light_order = range(c_light + 1) if light_is_first else range(c_light, -1, -1)

    for light_share in light_order:
        # light child cell (light_share, s + heavy_share), heavy child cell (heavy_share, s + light_share)
        light_part = sliding_window_view(light_table[light_share], width)[: c_heavy + 1]
        heavy_part = heavy_table[:, light_share: light_share + width]
        if light_is_first:
            p1, p2 = light_share, heavy_shares
            first, second = light_part, heavy_part
        else:
            p1, p2 = heavy_shares, light_share
            first, second = heavy_part, light_part
        q1, q2 = c1 - p1, c2 - p2
        candidate = (
            first
            + second
            + (p1 * q2 + p2 * q1) * (w1 + w2)
            + (p1 * w1 + p2 * w2) * t
            + (q1 * w1 + q2 * w2) * s
        )

        rows = slice(light_share, light_share + c_heavy + 1)
        current = values[rows]
        improved = candidate > current if maximize else candidate < current
        current[improved] = candidate[improved]
        choices[rows][improved] = np.broadcast_to(p1, candidate.shape)[improved]

    return values, choices
