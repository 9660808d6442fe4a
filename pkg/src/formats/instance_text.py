# src\formats\instance_text.py
# Line-oriented instance and points formats. '#' starts a comment anywhere on a line.
#
#   tree <n>
#   edge <u> <v> <w>      (n-1 lines)
#   mass <v> <count>      (zero or more)
#
# Points: one entry per line, "<coordinate>" or "<coordinate> x<count>".

PRINT_PREFIX = "FORMATS - INSTANCE"

# Standard library imports
import math
import sys
from collections import Counter

# Local imports
from src.core.errors import InstanceParseError, SolverError
from src.core.multiset import VertexMultiset, validate_multiset
from src.core.tree import WeightedTree, validate_tree


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    """(1-based line number, tokens) for every line with content left after stripping comments."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((number, tokens))
    return lines


def _parse_int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceParseError(line_number, f"{what} must be an integer, got '{token}'")


def _parse_float(token: str, line_number: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise InstanceParseError(line_number, f"{what} must be a decimal number, got '{token}'")
    if not math.isfinite(value):
        raise InstanceParseError(line_number, f"{what} must be finite, got '{token}'")
    return value


def parse_instance_text(text: str) -> tuple[WeightedTree, VertexMultiset]:
    """
    Parse and validate a tree instance.

    Raises:
        InstanceParseError: malformed text
        TreeValidationError, MultisetError: well-formed text describing an invalid instance
    """
    lines = _content_lines(text)
    if not lines:
        raise InstanceParseError(1, "empty instance, expected 'tree <n>'")

    number, tokens = lines[0]
    if tokens[0] != "tree" or len(tokens) != 2:
        raise InstanceParseError(number, "first line must be 'tree <n>'")
    n = _parse_int(tokens[1], number, "vertex count")
    if n < 1:
        raise InstanceParseError(number, f"vertex count must be >= 1, got {n}")

    edges: list[tuple[int, int, float]] = []
    masses: dict[int, int] = {}
    for number, tokens in lines[1:]:
        keyword = tokens[0]
        if keyword == "edge":
            if masses:
                raise InstanceParseError(number, "edge lines must come before mass lines")
            if len(tokens) != 4:
                raise InstanceParseError(number, "expected 'edge <u> <v> <w>'")
            edges.append((
                _parse_int(tokens[1], number, "edge endpoint"),
                _parse_int(tokens[2], number, "edge endpoint"),
                _parse_float(tokens[3], number, "edge weight"),
            ))
        elif keyword == "mass":
            if len(tokens) != 3:
                raise InstanceParseError(number, "expected 'mass <v> <count>'")
            v = _parse_int(tokens[1], number, "mass vertex")
            if v in masses:
                raise InstanceParseError(number, f"duplicate mass entry for vertex {v}")
            masses[v] = _parse_int(tokens[2], number, "mass count")
        else:
            raise InstanceParseError(number, f"unknown keyword '{keyword}'")

    if len(edges) != n - 1:
        raise InstanceParseError(lines[-1][0], f"'tree {n}' needs {n - 1} edge lines, got {len(edges)}")

    tree = validate_tree(n, edges)
    multiset = validate_multiset(tree, masses)
    print(f"[DEBUG] [{PRINT_PREFIX}] Parsed tree instance n={n}, m={multiset.total_mass}")
    return tree, multiset


def parse_points_text(text: str) -> Counter:
    """
    Parse a points file into a coordinate -> count map.

    Raises:
        InstanceParseError: malformed line or count below 1
    """
    counts: Counter = Counter()
    for number, tokens in _content_lines(text):
        if len(tokens) > 2:
            raise InstanceParseError(number, "expected '<coordinate>' or '<coordinate> x<count>'")
        coordinate = _parse_float(tokens[0], number, "coordinate")
        count = 1
        if len(tokens) == 2:
            if not tokens[1].startswith("x"):
                raise InstanceParseError(number, f"count must be written as x<count>, got '{tokens[1]}'")
            count = _parse_int(tokens[1][1:], number, "count")
            if count < 1:
                raise InstanceParseError(number, f"count must be >= 1, got {count}")
        counts[coordinate] += count
    print(f"[DEBUG] [{PRINT_PREFIX}] Parsed {sum(counts.values())} points at {len(counts)} coordinates")
    return counts


def format_number(value: float) -> str:
    """Integers without a decimal point, everything else with full precision."""
    value = float(value)
    return str(int(value)) if value.is_integer() else repr(value)


def write_instance_text(tree: WeightedTree, multiset: VertexMultiset, comments: list[str] | None = None) -> str:
    """Instance text that parse_instance_text reads back into an equal instance."""
    lines = [f"# {comment}" for comment in comments or []]
    lines.append(f"tree {tree.vertex_count}")
    lines.extend(f"edge {u} {v} {format_number(w)}" for u, v, w in tree.edges)
    lines.extend(f"mass {v} {count}" for v, count in sorted(multiset.masses.items()))
    return "\n".join(lines) + "\n"


def write_points_text(points: Counter) -> str:
    lines = []
    for coordinate in sorted(points):
        count = points[coordinate]
        lines.append(format_number(coordinate) if count == 1 else f"{format_number(coordinate)} x{count}")
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    """Read an input file, '-' meaning standard input."""
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, "r", encoding="utf-8") as file:
            return file.read()
    except UnicodeDecodeError as e:
        raise SolverError(f"input '{path}' is not valid UTF-8 text: {e}")
    except OSError as e:
        raise SolverError(f"cannot read input '{path}': {e}")
