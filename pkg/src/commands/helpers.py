# src\commands\helpers.py
# Helpers shared by the commands

PRINT_PREFIX = "COMMANDS - HELPERS"

# Local imports
from src.core.line import line_to_tree
from src.core.multiset import VertexMultiset
from src.core.tree import WeightedTree
from src.formats.instance_text import parse_instance_text, parse_points_text, read_text


def load_instance(path: str, input_format: str) -> tuple[WeightedTree, VertexMultiset]:
    """Read a tree instance or a points file; points become their path tree."""
    text = read_text(path)
    if input_format == "points":
        return line_to_tree(parse_points_text(text))
    return parse_instance_text(text)
