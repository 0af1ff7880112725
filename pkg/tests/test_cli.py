import json
from pathlib import Path

import pytest

from barriercover.cli import main
from barriercover.fileio import parse_instance, parse_solution

CORPORA = Path(__file__).resolve().parent.parent / "corpora"
I1_TEXT = "L 4\nN 2\n0 1\n5 1\n"


@pytest.fixture()
def i1_path(tmp_path):
    path = tmp_path / "i1.bc"
    path.write_text(I1_TEXT)
    return str(path)


class TestGen:
    def test_fig5(self, tmp_path, capsys):
        assert main(["gen", "--family", "fig5", "--rho", "2", "--length", "12"]) == 0
        inst = parse_instance(capsys.readouterr().out)
        assert inst.length == 12 and inst.n == 5

    def test_fig5_bad_parameters(self, capsys):
        assert main(["gen", "--family", "fig5", "--rho", "2", "--length", "13"]) == 2

    def test_fig6(self, capsys):
        assert main(
            ["gen", "--family", "fig6", "--rho", "2", "--m", "4", "--delta", "1/8"]
        ) == 0
        inst = parse_instance(capsys.readouterr().out)
        assert inst.n == 5

    def test_random_empty_is_valid(self, capsys):
        assert main(["gen", "--family", "random", "--n", "0", "--length", "5"]) == 0
        inst = parse_instance(capsys.readouterr().out)
        assert inst.n == 0

    def test_missing_family_parameter(self, capsys):
        assert main(["gen", "--family", "fig5", "--rho", "2"]) == 2

    def test_exact_cover_with_sidecar(self, tmp_path):
        spec = tmp_path / "ec.json"
        spec.write_text(json.dumps({"m": 2, "sets": [[1], [1, 2], [2]], "k": 2}))
        out = tmp_path / "ec.bc"
        assert main(
            ["gen", "--family", "exact-cover", "--spec", str(spec), "--out", str(out)]
        ) == 0
        inst = parse_instance(out.read_text())
        assert inst.length == 5
        sidecar = json.loads((tmp_path / "ec.bc.meta.json").read_text())
        assert sidecar["B"] == "330" and sidecar["k"] == 2

    def test_exact_cover_requires_out(self, tmp_path):
        spec = tmp_path / "ec.json"
        spec.write_text(json.dumps({"m": 1, "sets": [[1]], "k": 1}))
        assert main(["gen", "--family", "exact-cover", "--spec", str(spec)]) == 2


class TestSolve:
    def test_fpt_finds_the_optimum(self, i1_path, capsys):
        assert main(["solve", "--algo", "fpt", "--budget", "3", i1_path]) == 0
        recorded, positions = parse_solution(capsys.readouterr().out)
        assert recorded == 3 and positions == (1, 3)

    def test_dp_exact_absent(self, i1_path):
        assert main(["solve", "--algo", "dp-exact", "--budget", "2", i1_path]) == 1

    def test_oracle_zero_budget_on_covering_instance(self, tmp_path, capsys):
        path = tmp_path / "cov.bc"
        path.write_text("L 4\nN 2\n1 1\n3 1\n")
        assert main(["solve", "--algo", "oracle", "--budget", "0", str(path)]) == 0
        recorded, _ = parse_solution(capsys.readouterr().out)
        assert recorded == 0

    def test_dp_eps(self, i1_path, capsys):
        assert main(["solve", "--algo", "dp-eps", "--eps", "1/2", i1_path]) == 0
        recorded, _ = parse_solution(capsys.readouterr().out)
        assert 3 <= recorded <= 4.5

    def test_untangle_oracle(self, tmp_path, capsys):
        path = tmp_path / "i2.bc"
        path.write_text("L 12\nN 5\n0 2\n1 1\n3 1\n5 1\n7 1\n")
        assert main(["solve", "--algo", "untangle-oracle", str(path)]) == 0
        recorded, _ = parse_solution(capsys.readouterr().out)
        assert recorded == 18

    def test_infeasible_instance(self, tmp_path):
        path = tmp_path / "bad.bc"
        path.write_text("L 10\nN 1\n0 1\n")
        assert main(["solve", "--algo", "oracle", str(path)]) == 1

    def test_missing_budget_is_usage_error(self, i1_path):
        assert main(["solve", "--algo", "fpt", i1_path]) == 2

    def test_non_integral_input_is_precondition_error(self, tmp_path):
        path = tmp_path / "frac.bc"
        path.write_text("L 4\nN 1\n1/3 2\n")
        assert main(["solve", "--algo", "oracle", "--budget", "3", str(path)]) == 2

    def test_resource_limit_exit_code(self, tmp_path):
        path = tmp_path / "wide.bc"
        path.write_text("L 12\nN 4\n-8 2\n-5 2\n13 2\n16 2\n")
        assert main(
            ["solve", "--algo", "oracle", "--node-cap", "3", str(path)]
        ) == 3

    def test_output_file(self, i1_path, tmp_path):
        out = tmp_path / "sol.txt"
        assert main(
            ["solve", "--algo", "oracle", "--budget", "5", i1_path, "--out", str(out)]
        ) == 0
        recorded, _ = parse_solution(out.read_text())
        assert recorded == 3


class TestVerify:
    def test_good_solution_within_bounds(self, i1_path, tmp_path, capsys):
        sol = tmp_path / "sol.txt"
        sol.write_text("COST 3\n1\n3\n")
        assert main(["verify", "--max-cost", "3", i1_path, str(sol)]) == 0
        out = capsys.readouterr().out
        assert "covered: yes" in out and "movers: 2" in out

    def test_uncovered_solution_reports_gap(self, i1_path, tmp_path, capsys):
        sol = tmp_path / "sol.txt"
        sol.write_text("COST 0\n0\n5\n")
        assert main(["verify", i1_path, str(sol)]) == 1
        out = capsys.readouterr().out
        assert "covered: no" in out and "gap: (1, 4)" in out

    def test_zero_movers_bound_on_home_solution(self, tmp_path):
        inst = tmp_path / "cov.bc"
        inst.write_text("L 4\nN 2\n1 1\n3 1\n")
        sol = tmp_path / "sol.txt"
        sol.write_text("COST 0\n1\n3\n")
        assert main(["verify", "--max-movers", "0", str(inst), str(sol)]) == 0

    def test_cost_bound_violation(self, i1_path, tmp_path):
        sol = tmp_path / "sol.txt"
        sol.write_text("COST 3\n1\n3\n")
        assert main(["verify", "--max-cost", "2", i1_path, str(sol)]) == 1

    def test_corrupt_cost_line(self, i1_path, tmp_path):
        sol = tmp_path / "sol.txt"
        sol.write_text("COST 7\n1\n3\n")
        assert main(["verify", i1_path, str(sol)]) == 2


class TestBench:
    def test_fig5_family_csv(self, tmp_path):
        out = tmp_path / "out.csv"
        assert main(
            ["bench", "--family", "fig5", "--rho", "2", "--lengths", "8,12",
             "--out", str(out)]
        ) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "instance,algo,status,cost,ref_cost,ratio,time_ms"
        assert len(lines) == 5
        assert any(",dp-optimal,ok,18,10,9/5," in line for line in lines)

    def test_empty_directory_gives_header_only(self, tmp_path, capsys):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert main(["bench", "--dir", str(empty)]) == 0
        out = capsys.readouterr().out
        assert out.strip() == "instance,algo,status,cost,ref_cost,ratio,time_ms"

    def test_directory_mode(self, tmp_path):
        (tmp_path / "a.bc").write_text(I1_TEXT)
        out = tmp_path / "out.csv"
        assert main(
            ["bench", "--dir", str(tmp_path), "--algos", "oracle,fpt",
             "--reference", "oracle", "--out", str(out)]
        ) == 0
        lines = out.read_text().strip().split("\n")
        assert len(lines) == 3
        assert all(",ok,3,3,1," in line for line in lines[1:])

    def test_family_and_dir_conflict(self, tmp_path):
        assert main(["bench", "--family", "fig5", "--dir", str(tmp_path)]) == 2

    def test_unknown_subcommand_usage(self):
        assert main(["frobnicate"]) == 2


class TestGoldenFiles:
    def test_corpora_parse(self):
        for name in ("i1.bc", "fig5_rho2_L12.bc", "random_seed42.bc", "e1.bc"):
            inst = parse_instance((CORPORA / name).read_text())
            assert inst.n >= 0

    def test_e1_sidecar(self):
        sidecar = json.loads((CORPORA / "e1.bc.meta.json").read_text())
        assert sidecar["B"] == "330" and sidecar["k"] == 2
