# src\solver\spec.py
# Problem variants: objective direction plus the side-size constraint

PRINT_PREFIX = "SOLVER - SPEC"

# Standard library imports
from dataclasses import dataclass
from enum import Enum

# Local imports
from src.core.errors import KOutOfRange, OddMassForBisection, SolverError


class Objective(Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"


class Constraint(Enum):
    ANY_SPLIT = "any"
    EXACT_SIZES = "exact"
    BISECTION = "bisection" # EXACT_SIZES(m/2), resolved once m is known


@dataclass(frozen=True)
class ProblemSpec:
    objective: Objective
    constraint: Constraint
    k: int | None = None

    @classmethod
    def max_cut(cls) -> "ProblemSpec":
        return cls(Objective.MAXIMIZE, Constraint.ANY_SPLIT)

    @classmethod
    def min_cut(cls) -> "ProblemSpec":
        """Trivial counterpart of MAX-CUT: putting everything on one side scores 0."""
        return cls(Objective.MINIMIZE, Constraint.ANY_SPLIT)

    @classmethod
    def max_bisection(cls) -> "ProblemSpec":
        return cls(Objective.MAXIMIZE, Constraint.BISECTION)

    @classmethod
    def min_bisection(cls) -> "ProblemSpec":
        return cls(Objective.MINIMIZE, Constraint.BISECTION)

    @classmethod
    def max_partition(cls, k: int) -> "ProblemSpec":
        return cls(Objective.MAXIMIZE, Constraint.EXACT_SIZES, k)

    @classmethod
    def min_partition(cls, k: int) -> "ProblemSpec":
        return cls(Objective.MINIMIZE, Constraint.EXACT_SIZES, k)

    @property
    def maximize(self) -> bool:
        return self.objective is Objective.MAXIMIZE

    def resolve_k(self, total_mass: int) -> int | None:
        """
        Side-A size required on an instance of the given total mass, None for ANY_SPLIT.

        Raises:
            OddMassForBisection: bisection of an odd total mass
            KOutOfRange: k outside 0..total_mass
        """
        if self.constraint is Constraint.ANY_SPLIT:
            return None
        if self.constraint is Constraint.BISECTION:
            if total_mass % 2:
                raise OddMassForBisection(f"bisection needs an even total mass, got m={total_mass}")
            return total_mass // 2
        if self.k is None or not 0 <= self.k <= total_mass:
            raise KOutOfRange(f"k={self.k} is outside 0..{total_mass}")
        return self.k


VARIANTS: dict[str, tuple[Objective, Constraint]] = {
    "max-cut": (Objective.MAXIMIZE, Constraint.ANY_SPLIT),
    "max-bisection": (Objective.MAXIMIZE, Constraint.BISECTION),
    "min-bisection": (Objective.MINIMIZE, Constraint.BISECTION),
    "max-partition": (Objective.MAXIMIZE, Constraint.EXACT_SIZES),
    "min-partition": (Objective.MINIMIZE, Constraint.EXACT_SIZES),
}


def spec_for_variant(variant: str, k: int | None = None) -> ProblemSpec:
    """Map a command-line variant name (and --k) to a ProblemSpec."""
    if variant not in VARIANTS:
        raise SolverError(f"unknown variant '{variant}', expected one of {', '.join(VARIANTS)}")
    objective, constraint = VARIANTS[variant]
    if constraint is Constraint.EXACT_SIZES:
        if k is None:
            raise SolverError(f"variant '{variant}' requires --k")
        return ProblemSpec(objective, constraint, k)
    return ProblemSpec(objective, constraint)
