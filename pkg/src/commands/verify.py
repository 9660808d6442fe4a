# src\commands\verify.py
# verify: compare the DP with the brute-force oracle on one instance or a seeded random batch

PRINT_PREFIX = "COMMANDS - VERIFY"

# Standard library imports
import argparse

# Local imports
from config.env_vars import TASK_TIMEOUT_SECONDS
from src.core.errors import SolverError
from src.core.generators import generate_trial
from src.formats.instance_text import write_instance_text
from src.oracle.crosscheck import crosscheck_instance
from src.workers.worker import map_with_fallback, start_workers, stop_workers
from .helpers import load_instance


def verify_trial(seed: int, trial: int, max_n: int, max_weight: int, max_mult: int, max_mass: int) -> dict:
    """One random trial; module-level so workers can run it."""
    tree, multiset = generate_trial(seed, trial, max_n, max_weight, max_mult, max_mass)
    mismatches, checks = crosscheck_instance(tree, multiset)
    return {
        "trial": trial,
        "checks": checks,
        "mismatches": mismatches,
        "instance": write_instance_text(tree, multiset, comments=[f"verify seed={seed} trial={trial}"]),
    }


def _report(outcomes: list[dict]) -> int:
    """Print PASS, or FAIL with the first counterexample as re-runnable instance text."""
    for outcome in outcomes:
        if outcome["mismatches"]:
            print(f"FAIL: trial {outcome['trial']}: {outcome['mismatches'][0]}")
            for line in outcome["mismatches"][1:]:
                print(f"  also: {line}")
            print(outcome["instance"], end="")
            return 1
    checks = sum(outcome["checks"] for outcome in outcomes)
    print(f"PASS: {len(outcomes)} instance(s), {checks} check(s)")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Returns:
        int: 0 when the DP and the oracle agree everywhere, 1 on the first mismatch
    """
    if args.random == bool(args.input):
        raise SolverError("verify needs exactly one of --input or --random")

    if args.input:
        tree, multiset = load_instance(args.input, args.format)
        mismatches, checks = crosscheck_instance(tree, multiset)
        return _report([{
            "trial": 0,
            "checks": checks,
            "mismatches": mismatches,
            "instance": write_instance_text(tree, multiset),
        }])

    task_args = [
        (args.seed, trial, args.max_n, args.max_weight, args.max_mult, args.max_mass)
        for trial in range(args.trials)
    ]
    print(f"[INFO] [{PRINT_PREFIX}] Verifying {args.trials} random instance(s) with seed {args.seed} on {args.workers} worker(s)")
    if args.workers > 0:
        start_workers(args.workers)
        try:
            outcomes = map_with_fallback(verify_trial, task_args, TASK_TIMEOUT_SECONDS)
        finally:
            stop_workers()
    else:
        outcomes = [verify_trial(*trial_args) for trial_args in task_args]
    return _report(outcomes)
