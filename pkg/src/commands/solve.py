# src\commands\solve.py
# solve: run one variant on an instance and print the run report

PRINT_PREFIX = "COMMANDS - SOLVE"

# Standard library imports
import argparse
import math
import time

# Local imports
from src.core.errors import ReevaluationMismatch, SolverError
from src.core.evaluate import cut_value_edge_decomposition
from src.core.line import threshold_cut
from src.core.normalize import normalize
from src.formats.report import RunReport
from src.solver.dp import TIE_BREAK_POLICY, solve
from src.solver.spec import spec_for_variant
from .helpers import load_instance


def cmd_solve(args: argparse.Namespace) -> int:
    """
    Solve the requested variant and print the report on stdout.

    Returns:
        int: exit code (errors surface as SolverError and are mapped by the dispatcher,
            a partition that fails re-evaluation as ReevaluationMismatch with exit code 1)
    """
    if args.compare_threshold and args.format != "points":
        raise SolverError("--compare-threshold needs --format points")

    tree, multiset = load_instance(args.input, args.format)
    spec = spec_for_variant(args.variant, args.k)

    started = time.perf_counter()
    instance = normalize(tree, multiset, root=args.root)
    normalized = time.perf_counter()
    result = solve(instance, spec)

    reevaluated = cut_value_edge_decomposition(tree, multiset, result.partition)
    if not math.isclose(reevaluated, result.value, rel_tol=1e-9, abs_tol=1e-9):
        raise ReevaluationMismatch(f"reported partition evaluates to {reevaluated}, solver reported {result.value}")

    sides = result.partition.to_rows()
    if tree.labels is not None:
        for row in sides:
            row["coordinate"] = tree.labels[row["vertex"]]

    threshold_value = None
    if args.compare_threshold:
        threshold_value, _ = threshold_cut(tree, multiset, result.k, spec.maximize)

    report = RunReport(
        mode=args.format,
        vertex_count=tree.vertex_count,
        total_mass=multiset.total_mass,
        variant=args.variant,
        k=result.k,
        value=result.value,
        sides=sides,
        normalized_vertices=instance.vertex_count,
        dummy_count=instance.dummy_count,
        pendant_count=instance.pendant_count,
        tie_break=TIE_BREAK_POLICY,
        opt_values=result.opt_values.tolist() if args.all_k else None,
        threshold_value=threshold_value,
        transitions=result.stats.as_dict(),
        timings_ms={"normalize": (normalized - started) * 1000.0, **result.timings_ms},
    )
    print(report.to_json() if args.output == "json" else report.to_text())
    return 0
