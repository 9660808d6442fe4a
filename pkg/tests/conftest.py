# tests\conftest.py
# Shared fixtures. Environment defaults are set before anything from src is imported.

import os
import sys

os.environ.setdefault("LOG_TO_FILE", "false")
os.environ.setdefault("DEBUG_ENABLED", "false")
os.environ.setdefault("VERIFY_WORKERS", "0")

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))

import pytest

# Installs the print override so tagged diagnostics go to stderr, as under main.py
import src.logging # noqa: F401

from src.core.line import line_to_tree
from src.core.multiset import validate_multiset
from src.core.tree import validate_tree


@pytest.fixture
def unit_line():
    """Unit-spaced points 0, 1, 2, 3."""
    return line_to_tree([0, 1, 2, 3])


@pytest.fixture
def small_star():
    """Center 0 with four unit legs, one copy everywhere."""
    tree = validate_tree(5, [(0, i, 1) for i in range(1, 5)])
    return tree, validate_multiset(tree, {v: 1 for v in range(5)})


@pytest.fixture
def write_file(tmp_path):
    """Write text to a temporary file and return its path as a string."""
    def _write(text: str, name: str = "instance.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
