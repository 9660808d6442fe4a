# src\commands\parsers.py
# Argument parsers for the solve, verify, gen and bench commands.

# Standard library imports
import argparse

# Local imports
from config.env_vars import BENCH_DEFAULT_REPEATS, VERIFY_WORKERS
from src.core.generators import FAMILIES
from src.solver.spec import VARIANTS


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{value}'")
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {number}")
    return number


def _non_negative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{value}'")
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {number}")
    return number


def _size_list(value: str) -> list[int]:
    sizes = [_positive_int(part.strip()) for part in value.split(",") if part.strip()]
    if not sizes:
        raise argparse.ArgumentTypeError("expected a comma-separated list of sizes")
    return sizes


def get_arguments() -> argparse.ArgumentParser:
    """Build the top-level parser with one sub-parser per command."""
    parser = argparse.ArgumentParser(
        prog="treecut",
        description="Exact optimal cuts and partitions of point multisets in tree metrics.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="solve one cut/partition variant on an instance")
    solve.add_argument("--input", required=True, help="instance or points file, '-' for stdin")
    solve.add_argument("--format", choices=("tree", "points"), default="tree")
    solve.add_argument("--variant", choices=tuple(VARIANTS), required=True)
    solve.add_argument("--k", type=_non_negative_int, default=None, help="side-A size, required for *-partition")
    solve.add_argument("--all-k", action="store_true", help="also report opt_k for every k")
    solve.add_argument("--output", choices=("json", "text"), default="json")
    solve.add_argument("--root", type=_non_negative_int, default=0, help="vertex to root the normalized tree at")
    solve.add_argument("--compare-threshold", action="store_true", help="points mode: also report the best threshold cut")
    solve.add_argument("--seed", type=int, default=None, help="accepted for symmetry with the other commands, unused")

    verify = commands.add_parser("verify", help="cross-check the DP against the brute-force oracle")
    verify.add_argument("--input", help="instance or points file, '-' for stdin")
    verify.add_argument("--format", choices=("tree", "points"), default="tree")
    verify.add_argument("--random", action="store_true", help="verify a seeded batch of random instances")
    verify.add_argument("--trials", type=_positive_int, default=100)
    verify.add_argument("--max-n", type=_positive_int, default=7)
    verify.add_argument("--max-weight", type=_non_negative_int, default=10)
    verify.add_argument("--max-mult", type=_positive_int, default=3)
    verify.add_argument("--max-mass", type=_non_negative_int, default=8)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--workers", type=_non_negative_int, default=VERIFY_WORKERS, help="0 runs trials in this process")

    gen = commands.add_parser("gen", help="print a seeded random instance")
    gen.add_argument("--type", choices=FAMILIES, default="random-tree")
    gen.add_argument("--n", type=_positive_int, required=True)
    gen.add_argument("--max-weight", type=_non_negative_int, default=10)
    gen.add_argument("--max-mult", type=_positive_int, default=1)
    gen.add_argument("--seed", type=int, required=True)

    bench = commands.add_parser("bench", help="time end-to-end solves on generated set instances")
    bench.add_argument("--sizes", type=_size_list, default=[50, 100, 200])
    bench.add_argument("--variant", choices=tuple(VARIANTS), default="min-bisection")
    bench.add_argument("--k", type=_non_negative_int, default=None)
    bench.add_argument("--family", choices=("path", "random-tree"), default="path")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeats", type=_positive_int, default=BENCH_DEFAULT_REPEATS)

    return parser
