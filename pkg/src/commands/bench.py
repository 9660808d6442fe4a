# src\commands\bench.py
# bench: time end-to-end solves on generated set instances and print CSV

PRINT_PREFIX = "COMMANDS - BENCH"

# Standard library imports
import argparse
import csv
import sys
import time

# Third-party imports
import numpy as np

# Local imports
from src.core.generators import generate_instance
from src.core.normalize import normalize
from src.solver.dp import solve
from src.solver.spec import spec_for_variant

BENCH_MAX_WEIGHT = 10


def time_solve(family: str, size: int, seed: int, variant: str, k: int | None, repeats: int) -> list[float]:
    """Wall-clock milliseconds of normalize + solve, one entry per repeat."""
    tree, multiset = generate_instance(family, size, seed, max_weight=BENCH_MAX_WEIGHT, max_mult=1)
    spec = spec_for_variant(variant, k)
    spec.resolve_k(multiset.total_mass) # Fail before timing anything
    timings = []
    for _ in range(repeats):
        started = time.perf_counter()
        solve(normalize(tree, multiset), spec)
        timings.append((time.perf_counter() - started) * 1000.0)
    return timings


def fit_exponent(sizes: list[float], means_ms: list[float]) -> tuple[float, float]:
    """
    Least-squares fit of means_ms ~ constant * size ** exponent on a log-log scale.

    Returns:
        (exponent, constant_ms)
    Raises:
        ValueError: fewer than two sizes with positive timings
    """
    points = [(s, t) for s, t in zip(sizes, means_ms) if s > 0 and t > 0]
    if len({s for s, _ in points}) < 2:
        raise ValueError(f"need at least two distinct sizes with positive timings, got {len(points)} point(s)")
    slope, intercept = np.polyfit(np.log([s for s, _ in points]), np.log([t for _, t in points]), 1)
    return float(slope), float(np.exp(intercept))


def cmd_bench(args: argparse.Namespace) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["size", "mean_ms", "stddev_ms"])
    means = []
    for size in args.sizes:
        timings = np.array(time_solve(args.family, size, args.seed, args.variant, args.k, args.repeats))
        stddev = float(timings.std(ddof=1)) if len(timings) > 1 else 0.0
        writer.writerow([size, f"{timings.mean():.3f}", f"{stddev:.3f}"])
        sys.stdout.flush()
        means.append(float(timings.mean()))
        print(f"[INFO] [{PRINT_PREFIX}] {args.family} n={size}: {timings.mean():.1f} ms over {args.repeats} run(s)")
    try:
        exponent, constant_ms = fit_exponent(args.sizes, means)
        print(f"[INFO] [{PRINT_PREFIX}] Observed growth exponent {exponent:.3f} (constant {constant_ms:.3g} ms)")
    except ValueError:
        pass # Single size, nothing to fit
    return 0
