# This script fits the growth exponent of the solver from a bench CSV (size,mean_ms,stddev_ms).
# The slope of log(mean_ms) against log(size) estimates the exponent of the running time.
# `main.py bench` logs the same fit on stderr, this script refits a saved CSV.

# On home directory of the project, run:
# python main.py bench --sizes 50,100,200,400 > bench.csv
# python -m automations.scripts.fit_exponent bench.csv

from src import logging # Import logging module for standardized logging, initializes on import


if __name__ == "__main__": # Main entry point enforcement, ensures the script is run directly and not imported on accident.
    import csv
    import sys

    from src.commands.bench import fit_exponent

    if len(sys.argv) < 2:
        print("Usage: python -m automations.scripts.fit_exponent <bench.csv>")
        exit(1)
    csv_path = sys.argv[1]

    try:
        with open(csv_path, newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        exponent, constant_ms = fit_exponent([float(row["size"]) for row in rows], [float(row["mean_ms"]) for row in rows])
    except (OSError, KeyError, ValueError) as e:
        print(f"[ERROR] [SCRIPT FIT EXPONENT] Could not fit '{csv_path}': {e}")
        exit(1)

    print(f"exponent={exponent:.3f} constant_ms={constant_ms:.6g}")
    exit(0)
