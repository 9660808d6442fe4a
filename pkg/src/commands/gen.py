# src\commands\gen.py
# gen: print a deterministic random instance

PRINT_PREFIX = "COMMANDS - GEN"

# Standard library imports
import argparse

# Local imports
from src.core.generators import generate_instance
from src.formats.instance_text import write_instance_text


def cmd_gen(args: argparse.Namespace) -> int:
    tree, multiset = generate_instance(args.type, args.n, args.seed, args.max_weight, args.max_mult)
    header = f"gen type={args.type} n={args.n} max-weight={args.max_weight} max-mult={args.max_mult} seed={args.seed}"
    print(write_instance_text(tree, multiset, comments=[header]), end="")
    return 0
