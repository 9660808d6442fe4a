# src\commands\__init__.py
# Command dispatch for the treecut CLI.

PRINT_PREFIX = "CLI"

# Standard library imports
import sys

# Local imports
from src.core.errors import SolverError
from .bench import cmd_bench
from .gen import cmd_gen
from .parsers import get_arguments
from .solve import cmd_solve
from .verify import cmd_verify

COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def run(argv: list[str]) -> int:
    """
    Parse argv and run the selected command.

    Returns:
        int: process exit code
    """
    args = get_arguments().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SolverError as e:
        print(f"[ERROR] [{PRINT_PREFIX}] {e}", file=sys.stderr)
        return e.exit_code
