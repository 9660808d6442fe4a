# main.py
# Entry point for the treecut command line.

# Automatically sets up logging on import
import src.logging as logging # type: ignore

PRINT_PREFIX = "MAIN"

# Standard library imports
import sys

# Local imports
from src.commands import run


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
