import csv
import io
import json
import math

import pytest

from specturan.cli import main
from specturan.graph import make_turan, read_edge_list, write_edge_list_file


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_turan_to_file_then_mu(self, tmp_path, capsys):
        path = str(tmp_path / "g.el")
        code, out, err = run_cli(
            capsys, "gen", "--family", "turan", "--n", "7", "--r", "3", "-o", path
        )
        assert code == 0 and out == ""
        code, out, err = run_cli(capsys, "mu", path, "--tol", "1e-10")
        assert code == 0
        rec = json.loads(out)
        # largest root of 3/(x+3) + 4/(x+2) = 1
        assert rec["value"] == pytest.approx(1 + math.sqrt(13), abs=1e-8)
        assert rec["converged"] is True

    def test_gen_stdout(self, capsys):
        code, out, err = run_cli(capsys, "gen", "--family", "complete", "--n", "3")
        assert code == 0
        assert out == "3 3\n0 1\n0 2\n1 2\n"

    def test_gnm_deterministic(self, tmp_path, capsys):
        a, b = str(tmp_path / "a.el"), str(tmp_path / "b.el")
        for path in (a, b):
            code, _, _ = run_cli(
                capsys, "gen", "--family", "gnm", "--n", "20", "--m", "95",
                "--seed", "42", "-o", path,
            )
            assert code == 0
        assert open(a).read() == open(b).read()

    def test_krplus_parts(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--family", "krplus", "--parts", "2,1,1")
        assert code == 0
        assert read_edge_list(out).edge_count() == 6  # K_4

    def test_missing_args_usage_error(self, capsys):
        code, out, err = run_cli(capsys, "gen", "--family", "turan")
        assert code == 1
        assert "error" in err and out == ""


class TestStatistics:
    @pytest.fixture()
    def t26_plus(self, tmp_path):
        path = str(tmp_path / "t26p.el")
        g = make_turan(6, 2).with_edge(0, 1)
        write_edge_list_file(g, path)
        return path

    def test_cliques(self, t26_plus, capsys):
        code, out, _ = run_cli(capsys, "cliques", t26_plus, "--r", "3")
        assert code == 0
        assert json.loads(out) == {"count": 3, "r": 3}

    def test_joints(self, t26_plus, capsys):
        code, out, _ = run_cli(capsys, "joints", t26_plus, "--r", "3")
        rec = json.loads(out)
        assert code == 0
        assert rec["size"] == 3 and rec["witness_edge"] == [0, 1]

    def test_joints_per_edge(self, t26_plus, capsys):
        code, out, _ = run_cli(capsys, "joints", t26_plus, "--r", "3", "--per-edge")
        rec = json.loads(out)
        assert rec["per_edge"]["0,1"] == 3

    def test_books(self, t26_plus, capsys):
        code, out, _ = run_cli(capsys, "books", t26_plus, "--r", "2")
        rec = json.loads(out)
        assert code == 0 and rec["size"] == 3

    def test_csv_json_numeric_parity(self, t26_plus, capsys):
        code, jout, _ = run_cli(capsys, "joints", t26_plus, "--r", "3")
        code, cout, _ = run_cli(capsys, "joints", t26_plus, "--r", "3",
                                "--format", "csv")
        jrec = json.loads(jout)
        rows = list(csv.reader(io.StringIO(cout)))
        crec = dict(zip(rows[0], rows[1]))
        assert int(crec["size"]) == jrec["size"]
        assert json.loads(crec["witness_edge"]) == jrec["witness_edge"]

    def test_missing_file_is_io_error(self, capsys):
        code, out, err = run_cli(capsys, "cliques", "/nonexistent.el", "--r", "3")
        assert code == 1 and "error" in err


class TestFind:
    def test_absent_exit_zero(self, tmp_path, capsys):
        path = str(tmp_path / "t28.el")
        write_edge_list_file(make_turan(8, 2), path)
        code, out, _ = run_cli(
            capsys, "find", path, "--target", "kplus", "--parts", "2,2"
        )
        assert code == 0
        assert json.loads(out)["status"] == "absent"

    def test_found_embedding(self, tmp_path, capsys):
        path = str(tmp_path / "k4.el")
        write_edge_list_file(make_turan(4, 4), path)  # K_4
        code, out, _ = run_cli(
            capsys, "find", path, "--target", "kplus", "--parts", "2,2"
        )
        rec = json.loads(out)
        assert code == 0 and rec["status"] == "found"
        assert rec["extra_edge"] is not None

    def test_budget_exit_three(self, tmp_path, capsys):
        path = str(tmp_path / "t.el")
        write_edge_list_file(make_turan(40, 4), path)
        code, out, _ = run_cli(
            capsys, "find", path, "--target", "multipartite",
            "--parts", "3,3,3,3,3", "--budget", "3",
        )
        assert code == 3
        assert json.loads(out)["status"] == "budget"


class TestCheck:
    def test_stt_yes_exit_zero(self, tmp_path, capsys):
        path = str(tmp_path / "g.el")
        write_edge_list_file(make_turan(6, 2).with_edge(0, 1), path)
        code, out, _ = run_cli(capsys, "check", path, "--theorem", "stt", "--r", "2")
        rec = json.loads(out)
        assert code == 0
        assert rec["hypothesis"] == "yes" and rec["conclusion"] == "yes"

    def test_tie_exit_inconclusive(self, tmp_path, capsys):
        path = str(tmp_path / "t.el")
        write_edge_list_file(make_turan(6, 2), path)
        code, out, _ = run_cli(capsys, "check", path, "--theorem", "stt", "--r", "2")
        assert code == 3  # exact tie: certified comparison stays open

    def test_counterexample_exit_two(self, tmp_path, capsys):
        path = str(tmp_path / "k4.el")
        write_edge_list_file(make_turan(4, 4), path)
        code, out, _ = run_cli(
            capsys, "check", path, "--theorem", "t2", "--r", "2", "--c", "10.0"
        )
        rec = json.loads(out)
        assert code == 2
        assert rec["hypothesis"] == "yes" and rec["conclusion"] == "no"
        assert rec["graph"] is not None

    def test_tsize_without_graph(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "--theorem", "tsize", "--n", "7", "--r", "3"
        )
        rec = json.loads(out)
        assert code == 0 and rec["conclusion"] == "yes"

    def test_stability(self, tmp_path, capsys):
        path = str(tmp_path / "t.el")
        write_edge_list_file(make_turan(20, 2), path)
        code, out, _ = run_cli(
            capsys, "check", path, "--theorem", "t1.2", "--r", "2", "--b", "0.001"
        )
        rec = json.loads(out)
        assert code == 0
        assert rec["certificate"]["branch"] == "b"

    def test_t2_requires_c(self, tmp_path, capsys):
        path = str(tmp_path / "t.el")
        write_edge_list_file(make_turan(6, 2), path)
        code, _, err = run_cli(capsys, "check", path, "--theorem", "t2", "--r", "2")
        assert code == 1 and "needs --c" in err

    def test_params_echo_tol(self, tmp_path, capsys):
        path = str(tmp_path / "t.el")
        write_edge_list_file(make_turan(6, 2).with_edge(0, 1), path)
        code, out, _ = run_cli(
            capsys, "check", path, "--theorem", "stt", "--r", "2", "--tol", "1e-8"
        )
        assert json.loads(out)["params"]["tol"] == 1e-8


class TestEnvOverrides:
    def test_tol_env(self, tmp_path, capsys, monkeypatch):
        path = str(tmp_path / "t.el")
        write_edge_list_file(make_turan(6, 2).with_edge(0, 1), path)
        monkeypatch.setenv("SPECTURAN_TOL", "1e-6")
        code, out, _ = run_cli(capsys, "check", path, "--theorem", "stt", "--r", "2")
        assert json.loads(out)["params"]["tol"] == 1e-6
        # explicit flag wins over the environment
        code, out, _ = run_cli(
            capsys, "check", path, "--theorem", "stt", "--r", "2", "--tol", "1e-9"
        )
        assert json.loads(out)["params"]["tol"] == 1e-9

    def test_budget_env(self, tmp_path, capsys, monkeypatch):
        path = str(tmp_path / "t.el")
        write_edge_list_file(make_turan(40, 4), path)
        monkeypatch.setenv("SPECTURAN_BUDGET", "3")
        code, out, _ = run_cli(
            capsys, "find", path, "--target", "multipartite", "--parts", "3,3,3,3,3"
        )
        assert code == 3  # env budget of 3 exhausts


class TestExperimentCommand:
    def test_config_file_run(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        out_path = tmp_path / "report.json"
        cfg.write_text(
            f"mode = exhaustive\nn = 4\nr = 2\nchecks = stt,tsize\n"
            f"output = {out_path}\n"
        )
        code, out, _ = run_cli(capsys, "experiment", "--config", str(cfg))
        assert code == 0
        payload = json.loads(out)
        assert payload["counterexamples"] == []
        assert out_path.exists()
        assert json.loads(out_path.read_text())["instances_checked"] == 65

    def test_set_overrides(self, capsys):
        code, out, _ = run_cli(
            capsys, "experiment", "--set", "mode=exhaustive", "--set", "n=3",
            "--set", "r=2", "--set", "checks=tsize",
        )
        assert code == 0
        assert json.loads(out)["instances_checked"] == 1

    def test_no_config_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "experiment")
        assert code == 1 and "error" in err


class TestUsageContract:
    def test_unknown_subcommand(self, capsys):
        code, out, err = run_cli(capsys, "frobnicate")
        assert code == 1 and out == ""

    def test_stdout_machine_parseable_only(self, tmp_path, capsys):
        path = str(tmp_path / "g.el")
        write_edge_list_file(make_turan(5, 2), path)
        code, out, err = run_cli(capsys, "mu", path)
        json.loads(out)  # must parse
        assert err == ""
