# src\core\errors.py
# Error taxonomy shared by every module. Each class carries the CLI exit code it maps to.


class SolverError(ValueError):
    """Base class for every input, feasibility or capacity error raised by the solver."""
    exit_code: int = 2


# Tree validation
class TreeValidationError(SolverError):
    """Raw vertex count or edge list does not describe a valid weighted tree."""

class DisconnectedGraph(TreeValidationError):
    pass

class CycleDetected(TreeValidationError):
    """Raised for cycles, self-loops and duplicate edges."""

class NegativeWeight(TreeValidationError):
    """Raised for negative or non-finite edge weights."""

class BadVertexId(TreeValidationError):
    pass


# Multisets and partitions
class MultisetError(SolverError):
    pass

class InvalidMultiplicity(MultisetError):
    pass

class PartitionMassMismatch(MultisetError):
    """Side counts do not add up to the multiplicities of the multiset."""


# Points on the real line
class LineInputError(SolverError):
    pass

class EmptyInput(LineInputError):
    pass

class NonFiniteCoordinate(LineInputError):
    pass


# Problem specs that cannot be satisfied by the instance
class InfeasibleSpecError(SolverError):
    exit_code = 3

class OddMassForBisection(InfeasibleSpecError):
    pass

class KOutOfRange(InfeasibleSpecError):
    pass


class InstanceTooLargeForOracle(SolverError):
    """The exhaustive oracle refuses instances beyond its hard caps."""


class InstanceParseError(SolverError):
    """Instance or points text could not be parsed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class ReevaluationMismatch(SolverError):
    """A reported partition does not re-evaluate to the reported value."""
    exit_code = 1
