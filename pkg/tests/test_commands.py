"""
tests/test_commands.py
======================
The treecut command line end to end: reports, exit codes, determinism and the verify negative control.
"""

import csv
import io
import json

import pytest

import src.logging as solver_logging
import src.solver.transitions as transitions
from src.commands import run
from src.commands.bench import fit_exponent
from src.core.evaluate import cut_value_pairwise
from src.core.multiset import partition_from_side_a
from src.formats.instance_text import parse_instance_text
from src.formats.report import without_timings

UNIT_POINTS = "0\n1\n2\n3\n"
STAR = "tree 5\nedge 0 1 1\nedge 0 2 1\nedge 0 3 1\nedge 0 4 1\nmass 0 1\nmass 1 1\nmass 2 1\nmass 3 1\nmass 4 1\n"


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == 0
    return json.loads(out)


class TestSolve:
    def test_unit_points_min_bisection(self, capsys, write_file):
        report = _run_json(capsys, ["solve", "--input", write_file(UNIT_POINTS), "--format", "points", "--variant", "min-bisection", "--compare-threshold"])
        assert report["value"] == 6
        assert report["k"] == 2
        assert report["threshold_value"] == 8
        assert report["instance"] == {"mode": "points", "n": 4, "m": 4, "normalized_vertices": 7, "dummies": 0, "pendants": 3}
        assert [row["coordinate"] for row in report["sides"]] == [0.0, 1.0, 2.0, 3.0]
        assert report["solver"]["transitions"]["two_child_rows"] == 0
        assert set(report["timings_ms"]) == {"normalize", "solve", "backtrack"}
        assert all(ms >= 0 for ms in report["timings_ms"].values())

    def test_reported_sides_re_evaluate(self, capsys, write_file):
        path = write_file(STAR)
        report = _run_json(capsys, ["solve", "--input", path, "--variant", "max-partition", "--k", "2", "--all-k"])
        tree, multiset = parse_instance_text(STAR)
        partition = partition_from_side_a(multiset, {row["vertex"]: row["a"] for row in report["sides"]})
        assert cut_value_pairwise(tree, multiset, partition) == report["value"] == 10
        assert report["opt_values"] == [0, 7, 10, 10, 7, 0]

    def test_empty_side(self, capsys, write_file):
        report = _run_json(capsys, ["solve", "--input", write_file(STAR), "--variant", "max-partition", "--k", "0"])
        assert report["value"] == 0

    def test_three_point_max_cut(self, capsys, write_file):
        report = _run_json(capsys, ["solve", "--input", write_file("0\n1\n2\n"), "--format", "points", "--variant", "max-cut"])
        assert report["value"] == 3

    def test_stdin_and_text_output(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(UNIT_POINTS))
        assert run(["solve", "--input", "-", "--format", "points", "--variant", "max-bisection", "--output", "text"]) == 0
        out = capsys.readouterr().out
        assert "value: 8.0" in out
        assert "vertex 3 (x=3.0)" in out

    def test_root_does_not_change_the_value(self, capsys, write_file):
        path = write_file(STAR)
        first = _run_json(capsys, ["solve", "--input", path, "--variant", "min-partition", "--k", "2"])
        second = _run_json(capsys, ["solve", "--input", path, "--variant", "min-partition", "--k", "2", "--root", "3"])
        assert first["value"] == second["value"] == 9

    def test_deterministic(self, capsys, write_file):
        path = write_file(STAR)
        argv = ["solve", "--input", path, "--variant", "max-cut", "--seed", "5"]
        assert without_timings(_run_json(capsys, argv)) == without_timings(_run_json(capsys, argv))

    def test_odd_bisection_is_infeasible(self, capsys, write_file):
        assert run(["solve", "--input", write_file("0\n1\n2\n"), "--format", "points", "--variant", "min-bisection"]) == 3
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "[ERROR] [CLI]" in captured.err

    def test_k_out_of_range(self, capsys, write_file):
        assert run(["solve", "--input", write_file(STAR), "--variant", "min-partition", "--k", "6"]) == 3

    @pytest.mark.parametrize(
        "text, extra",
        [
            ("tree 3\nedge 0 1 1\n", []),
            ("tree 2\nedge 0 1 -4\n", []),
            ("tree 2\nedge 0 1 1\nmass 7 1\n", []),
            (STAR, ["--compare-threshold"]),
        ],
    )
    def test_input_errors(self, capsys, write_file, text, extra):
        assert run(["solve", "--input", write_file(text), "--variant", "max-cut", *extra]) == 2
        assert capsys.readouterr().err.count("\n") == 1

    def test_partition_needs_k(self, capsys, write_file):
        assert run(["solve", "--input", write_file(STAR), "--variant", "max-partition"]) == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(["solve", "--input", str(tmp_path / "nope.txt"), "--variant", "max-cut"]) == 2

    def test_invalid_utf8_input(self, capsys, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes(b"tree 2\nedge 0 1 1\n# \xff\xfe\n")
        assert run(["solve", "--input", str(path), "--variant", "max-cut"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "[ERROR] [CLI]" in captured.err
        assert "UTF-8" in captured.err

    def test_re_evaluation_mismatch_fails(self, capsys, monkeypatch, write_file):
        monkeypatch.setattr("src.commands.solve.cut_value_edge_decomposition", lambda *args: -1.0)
        assert run(["solve", "--input", write_file(STAR), "--variant", "max-cut"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "[ERROR] [CLI] reported partition evaluates to -1.0" in captured.err

    def test_bad_flags(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            run(["solve", "--input", "x", "--variant", "sparsest-cut"])
        assert excinfo.value.code == 2


class TestVerify:
    def test_random_batch_passes(self, capsys):
        assert run(["verify", "--random", "--trials", "40", "--max-n", "7", "--seed", "42", "--workers", "0"]) == 0
        assert capsys.readouterr().out.startswith("PASS: 40 instance(s)")

    def test_single_vertex(self, capsys, write_file):
        assert run(["verify", "--input", write_file("tree 1\nmass 0 2\n")]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_points_input(self, capsys, write_file):
        assert run(["verify", "--input", write_file(UNIT_POINTS), "--format", "points"]) == 0

    def test_oversize(self, capsys, write_file):
        assert run(["verify", "--input", write_file("tree 2\nedge 0 1 1\nmass 0 15\nmass 1 6\n")]) == 2

    def test_needs_one_source(self, capsys, write_file):
        assert run(["verify"]) == 2
        assert run(["verify", "--random", "--input", write_file(STAR)]) == 2

    def test_corrupted_transition_fails_with_a_counterexample(self, capsys, monkeypatch):
        honest = transitions.two_child_row

        def corrupted(instance, v, child_values, objective):
            values, choices = honest(instance, v, child_values, objective)
            return values + 1.0, choices

        monkeypatch.setattr(transitions, "two_child_row", corrupted)
        assert run(["verify", "--random", "--trials", "20", "--seed", "3", "--workers", "0"]) == 1
        out = capsys.readouterr().out
        assert out.startswith("FAIL: trial ")
        # The counterexample is printed as instance text that parses back
        counterexample = out[out.index("# verify seed=3"):]
        tree, _ = parse_instance_text(counterexample)
        assert tree.vertex_count >= 2

    def test_workers_merge_in_trial_order(self, capsys):
        assert run(["verify", "--random", "--trials", "6", "--seed", "8", "--workers", "2"]) == 0
        assert capsys.readouterr().out.startswith("PASS: 6 instance(s)")


class TestGen:
    def test_path(self, capsys):
        assert run(["gen", "--type", "path", "--n", "4", "--max-weight", "1", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("# gen type=path n=4")
        tree, multiset = parse_instance_text(out)
        assert tree.vertex_count == 4
        assert [(u, v) for u, v, _ in tree.edges] == [(0, 1), (1, 2), (2, 3)]
        assert all(w in (0, 1) for _, _, w in tree.edges)
        assert multiset.masses == {0: 1, 1: 1, 2: 1, 3: 1}

    def test_byte_identical(self, capsys):
        argv = ["gen", "--type", "random-tree", "--n", "15", "--max-mult", "3", "--seed", "77"]
        run(argv)
        first = capsys.readouterr().out
        run(argv)
        assert capsys.readouterr().out == first

    def test_star(self, capsys):
        run(["gen", "--type", "star", "--n", "5", "--seed", "2"])
        tree, _ = parse_instance_text(capsys.readouterr().out)
        assert [(u, v) for u, v, _ in tree.edges] == [(0, 1), (0, 2), (0, 3), (0, 4)]

    @pytest.mark.parametrize("argv", [["gen", "--n", "0", "--seed", "1"], ["gen", "--n", "4"], ["gen", "--type", "cycle", "--n", "4", "--seed", "1"]])
    def test_bad_flags(self, capsys, argv):
        with pytest.raises(SystemExit) as excinfo:
            run(argv)
        assert excinfo.value.code == 2


class TestBench:
    def test_csv(self, capsys):
        assert run(["bench", "--sizes", "6,12", "--repeats", "3", "--family", "random-tree"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ["size", "mean_ms", "stddev_ms"]
        assert [row[0] for row in rows[1:]] == ["6", "12"]
        assert all(float(row[1]) > 0 and float(row[2]) >= 0 for row in rows[1:])

    def test_single_repeat(self, capsys):
        assert run(["bench", "--sizes", "4", "--repeats", "1", "--variant", "max-cut"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[1][2] == "0.000"

    def test_odd_mass_bisection(self, capsys):
        assert run(["bench", "--sizes", "5", "--repeats", "1"]) == 3

    @pytest.mark.parametrize("sizes", ["0", "a,b", ","])
    def test_bad_sizes(self, capsys, sizes):
        with pytest.raises(SystemExit) as excinfo:
            run(["bench", "--sizes", sizes])
        assert excinfo.value.code == 2

    def test_logs_the_observed_exponent(self, capsys, monkeypatch):
        monkeypatch.setattr(solver_logging, "CONSOLE_LOG_LEVEL", "INFO")
        assert run(["bench", "--sizes", "8,16,32", "--repeats", "1", "--family", "path"]) == 0
        err = capsys.readouterr().err
        assert "[INFO] [COMMANDS - BENCH] Observed growth exponent" in err


class TestFitExponent:
    def test_recovers_a_cubic(self):
        sizes = [10, 20, 40, 80]
        exponent, constant_ms = fit_exponent(sizes, [0.002 * n**3 for n in sizes])
        assert exponent == pytest.approx(3.0)
        assert constant_ms == pytest.approx(0.002)

    def test_skips_zero_timings(self):
        exponent, _ = fit_exponent([5, 10, 20, 40], [0.0, 1.0, 4.0, 16.0])
        assert exponent == pytest.approx(2.0)

    @pytest.mark.parametrize("sizes, means", [([10], [1.0]), ([10, 10], [1.0, 2.0]), ([10, 20], [0.0, 0.0])])
    def test_needs_two_sizes(self, sizes, means):
        with pytest.raises(ValueError):
            fit_exponent(sizes, means)
