import json
import subprocess
import sys

import pytest

from paritycount.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if code == 0 else None), err


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return {
        "triangle": write("triangle.txt", "3 3\n0 1\n1 2\n0 2\n"),
        "empty4": write("empty4.txt", "4 0\n"),
        "empty3": write("empty3.txt", "3 0\n"),
        "rainbow3": write("rainbow3.txt", "1\n2\n3\n"),
        "k4": write("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"),
        "cycle5": write("cycle5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"),
        "bad": write("bad.txt", "2 1\n0 0\n"),
        "tmp": tmp_path,
    }


class TestCount:
    def test_triangle(self, capsys, files):
        code, rep, _ = run(capsys, "count", "--graph", files["triangle"], "--k", 3, "--parity", "odd")
        assert code == 0 and rep["result"]["count"] == 1
        assert rep["schema_version"] == 1 and rep["command"] == "count"
        assert rep["input"] == {"n": 3, "m": 3}
        assert set(rep) == {"schema_version", "command", "input", "result", "timing_ms", "seed"}

    def test_tuples(self, capsys, files):
        _, rep, _ = run(capsys, "count", "--graph", files["triangle"], "--k", 3, "--parity", "odd", "--tuples")
        assert rep["result"]["count"] == 6

    def test_empty(self, capsys, files):
        _, rep, _ = run(capsys, "count", "--graph", files["empty4"], "--k", 2, "--parity", "even")
        assert rep["result"]["count"] == 6

    def test_parse_error_exit_2(self, capsys, files):
        code, _, err = run(capsys, "count", "--graph", files["bad"], "--k", 2, "--parity", "even")
        assert code == 2 and "line 2" in err

    def test_missing_file_exit_2(self, capsys, files):
        code, _, _ = run(capsys, "count", "--graph", files["tmp"] / "nope.txt", "--k", 2, "--parity", "even")
        assert code == 2

    def test_budget_exit_3(self, capsys, files):
        code, _, err = run(capsys, "count", "--graph", files["cycle5"], "--k", 3, "--parity", "even", "--budget", 5)
        assert code == 3 and "budget" in err


class TestDecide:
    def test_clique_no(self, capsys, files):
        p = files["tmp"] / "k10.txt"
        assert main(["gen", "--class", "clique", "--params", "10", "--out", str(p)]) == 0
        capsys.readouterr()
        _, rep, _ = run(capsys, "decide", "--graph", p, "--k", 3, "--parity", "even")
        assert rep["result"]["answer"] == "NO"

    def test_cycle_witness(self, capsys, files):
        _, rep, _ = run(capsys, "decide", "--graph", files["cycle5"], "--k", 3, "--parity", "odd", "--witness")
        assert rep["result"]["answer"] == "YES"
        w = rep["result"]["witness"]
        edges = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
        assert len(w) == 3 and sum((a, b) in edges for a in w for b in w if a < b) % 2 == 1

    def test_k1_odd(self, capsys, files):
        _, rep, _ = run(capsys, "decide", "--graph", files["k4"], "--k", 1, "--parity", "odd")
        assert rep["result"]["answer"] == "NO"


class TestApprox:
    def test_guaranteed_refusal_exit_3(self, capsys, files):
        p = files["tmp"] / "g30.txt"
        main(["gen", "--class", "gnp", "--params", "30", "0.5", "--seed", "1", "--out", str(p)])
        capsys.readouterr()
        code, _, err = run(capsys, "approx", "--graph", p, "--k", 4, "--parity", "even",
                           "--eps", "0.1", "--delta", "0.05", "--mode", "guaranteed")
        assert code == 3
        required = int(err.split("required: ")[1].rstrip(")\n"))
        assert required > 2**33 * 16 * 900

    def test_adaptive_report(self, capsys, files):
        p = files["tmp"] / "g20.txt"
        main(["gen", "--class", "gnp", "--params", "20", "0.5", "--seed", "3", "--out", str(p)])
        capsys.readouterr()
        args = ("approx", "--graph", p, "--k", 3, "--parity", "even", "--eps", "0.1", "--delta", "0.05", "--seed", 5)
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args)
        assert a["result"] == b["result"]
        assert a["result"]["successes"] == 1218 and a["result"]["density_bound"]["applicable"] is False

    def test_decide_no_is_exact_zero(self, capsys, files):
        _, rep, _ = run(capsys, "approx", "--graph", files["triangle"], "--k", 3, "--parity", "even",
                        "--eps", "0.1", "--delta", "0.05")
        assert rep["result"]["estimate"]["numerator"] == 0 and rep["result"]["samples_used"] == 0


class TestTotalEven:
    def test_values(self, capsys, files):
        _, rep, _ = run(capsys, "total-even", "--graph", files["triangle"])
        assert rep["result"]["total_even"] == 4 and "empty" in rep["result"]["note"]
        _, rep, _ = run(capsys, "total-even", "--graph", files["empty4"])
        assert rep["result"]["total_even"] == 16


class TestReduce:
    def test_rainbow_triangle(self, capsys, files):
        _, rep, _ = run(capsys, "reduce", "--graph", files["triangle"], "--colours", files["rainbow3"],
                        "--k", 3, "--parity", "even", "--trace")
        res = rep["result"]
        assert res["multicolour_cliques"] == 1 and res["oracle_calls"] == 8 and res["matrix_dimension"] == 8
        assert res["trace"]["N"][-1] == 1 and len(res["trace"]["family"]) == 8

    def test_edgeless(self, capsys, files):
        _, rep, _ = run(capsys, "reduce", "--graph", files["empty3"], "--colours", files["rainbow3"],
                        "--k", 3, "--parity", "odd")
        assert rep["result"]["multicolour_cliques"] == 0

    def test_corrupted_oracle_exit_4(self, capsys, files):
        code, _, err = run(capsys, "reduce", "--graph", files["triangle"], "--colours", files["rainbow3"],
                           "--k", 3, "--parity", "even", "--corrupt-oracle")
        assert code == 4 and "divisible" in err

    def test_k_guard_exit_2(self, capsys, files):
        code, _, _ = run(capsys, "reduce", "--graph", files["triangle"], "--colours", files["rainbow3"],
                         "--k", 6, "--parity", "even")
        assert code == 2


class TestGenAndCensus:
    @pytest.mark.parametrize("cls, params, n, m", [
        ("clique", ["4"], 4, 6),
        ("independent", ["5"], 5, 0),
        ("two-cliques", ["2", "3"], 5, 4),
        ("bipartite", ["3", "3"], 6, 9),
        ("gnp", ["10", "0"], 10, 0),
    ])
    def test_gen(self, capsys, files, cls, params, n, m):
        out = files["tmp"] / f"{cls}.txt"
        code, rep, _ = run(capsys, "gen", "--class", cls, "--params", *params, "--out", out)
        assert code == 0 and rep["input"] == {"n": n, "m": m}
        assert out.read_text().splitlines()[0] == f"{n} {m}"

    def test_gen_bad_params_exit_2(self, capsys, files):
        code, _, _ = run(capsys, "gen", "--class", "clique", "--params", "x", "--out", files["tmp"] / "x.txt")
        assert code == 2

    def test_census(self, capsys, files):
        _, rep, _ = run(capsys, "census", "--graph", files["k4"], "--k", 3)
        assert rep["result"]["histogram"] == {"0": 0, "1": 0, "2": 0, "3": 4}
        _, rep, _ = run(capsys, "census", "--graph", files["cycle5"], "--k", 3)
        assert rep["result"]["histogram"] == {"0": 0, "1": 5, "2": 5, "3": 0}
        assert rep["result"]["even"] == 5 and rep["result"]["odd"] == 5

    def test_census_empty5(self, capsys, files):
        p = files["tmp"] / "e5.txt"
        p.write_text("5 0\n")
        _, rep, _ = run(capsys, "census", "--graph", p, "--k", 3)
        assert rep["result"]["histogram"]["0"] == 10


class TestBench:
    @pytest.mark.parametrize("suite", ["small", "structured"])
    def test_suites(self, capsys, suite):
        _, rep, _ = run(capsys, "bench", "--suite", suite)
        rows = rep["result"]["rows"]
        assert rows and all(r["subsets_per_second"] is None or r["subsets_per_second"] > 0 for r in rows)
        if suite == "structured":
            names = " ".join(r["instance"] for r in rows)
            for cls in ("clique", "independent", "two_cliques", "complete_bipartite"):
                assert cls in names


def test_console_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "paritycount.cli", "count", "--graph", str(files["triangle"]), "--k", "3", "--parity", "odd"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["count"] == 1
