# tests/test_cli.py
import sys
import os
import io
import json
import logging

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.cli import EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, run_cli

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_monopoly_text_and_json():
    c4 = os.path.join(DATA, "c4.el")
    code, out, _ = run("check", "--graph", c4, "--set", "0,2", "--name", "monopoly")
    assert code == EXIT_OK
    assert out == "false\n"
    code, out, _ = run("check", "--graph", c4, "--set", "0,2", "--name", "monopoly", "--format", "json")
    assert json.loads(out) == {"result": False}


def test_check_raw_spec():
    k4 = os.path.join(DATA, "k4.el")
    code, out, _ = run("check", "--graph", k4, "--set", "0,1", "--D", "all", "--O", ">=1", "--global")
    assert code == EXIT_OK
    assert out == "true\n"


def test_check_with_neutrals_and_power():
    code, out, _ = run("check", "--graph-spec", "path:5", "--set", "2", "--D", "all", "--O", "all", "--global", "--power", "2")
    assert out == "true\n"
    code, out, _ = run(
        "check", "--graph-spec", "path:3", "--set", "0", "--D", "all", "--O", "all", "--global",
        "--neutrals", "2", "--neutral-mode", "reduced",
    )
    assert out == "true\n"


def test_solve_powerful_json():
    code, out, _ = run(
        "solve", "--graph", os.path.join(DATA, "c6.el"), "--name", "powerful", "--param", "r=0",
        "--objective", "min", "--format", "json",
    )
    assert code == EXIT_OK
    assert out.strip() == '{"feasible":true,"size":4,"witness":[0,1,3,4]}'


def test_solve_text_with_stats():
    code, out, _ = run("solve", "--graph-spec", "cycle:5", "--name", "half-dominating", "--stats")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[:2] == ["size: 2", "witness: {0,2}"]
    assert lines[2] == "subsets_examined: 32"


def test_solve_infeasible_exits_one():
    code, out, _ = run("solve", "--graph-spec", "cycle:4", "--name", "signed-efficient")
    assert code == EXIT_INFEASIBLE
    assert out == "infeasible\n"


def test_usage_errors_exit_two():
    assert run()[0] == EXIT_USAGE
    assert run("check", "--set", "0")[0] == EXIT_USAGE
    assert run("solve", "--graph-spec", "cycle:4", "--objective", "median", "--name", "maj1")[0] == EXIT_USAGE
    code, _, err = run("check", "--graph-spec", "cycle:4", "--name", "maj1", "--D", ">=0", "--O", ">=0")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_input_errors_exit_two():
    code, _, err = run("check", "--graph-spec", "cycle:4", "--set", "9", "--name", "maj1")
    assert code == EXIT_USAGE
    code, _, err = run("check", "--graph-spec", "hypercube:3", "--name", "maj1")
    assert code == EXIT_USAGE
    assert "unknown graph family" in err


def test_check_warns_on_isolated_vertex():
    code, out, err = run("check", "--graph-spec", "path:1", "--set", "", "--name", "half-dominating")
    assert code == EXIT_OK
    assert out == "false\n"
    assert "warning:" in err


def test_propagate():
    code, out, _ = run("propagate", "--graph", os.path.join(DATA, "c4.el"), "--seeds", "0", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"final": [0, 1, 2, 3], "rounds_used": 2, "activation_round": [0, 1, 2, 1]}
    code, out, _ = run("propagate", "--graph", os.path.join(DATA, "p3.el"), "--seeds", "0", "--thresholds", "0:1,1:2,2:1")
    assert out == "final: {0}\nrounds: 0\n"


def test_verify_single_proposition():
    code, out, _ = run("verify", "--prop", "monopoly-paper", "--family", "cycles", "--nmax", "4", "--format", "json", "--workers", "1")
    assert code == EXIT_OK
    reports = json.loads(out)["reports"]
    assert reports[0]["proposition_id"] == "monopoly-paper"
    assert any(c["set"] == "{0,2}" for c in reports[0]["counterexamples"])


def test_verify_text_report():
    code, out, _ = run("verify", "--prop", "half-dom", "--nmax", "3", "--workers", "1")
    assert code == EXIT_OK
    assert out.startswith("Equivalence report")
    assert "No counterexamples." in out


def test_gallai():
    code, out, _ = run("gallai", "--graph-spec", "cycle:5", "--format", "json")
    assert json.loads(out) == {"min_half_dom": 2, "max_half_ind": 3, "holds": True, "outside_applicability": False}
    code, out, err = run("gallai", "--graph-spec", "path:1")
    assert "holds: false" in out
    assert "warning:" in err


def test_generate():
    code, out, _ = run("generate", "cycle:4")
    assert out == "4 4\n0 1\n0 3\n1 2\n2 3\n"
    code, out, _ = run("generate", "random-gnp:8,1,2", "--seed", "3", "--format", "json")
    assert json.loads(out)["n"] == 8


def test_catalog():
    code, out, _ = run("catalog", "--format", "json")
    names = [e["name"] for e in json.loads(out)["entries"]]
    assert "monopoly" in names and "signed-dominating(1)" in names
    code, out, _ = run("catalog")
    assert "paper-erratum" in out


def test_undecodable_graph_file_is_an_input_error(tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_bytes(b"\xff\xfe 3 2\n0 1\n")
    code, out, err = run("check", "--graph", str(bad), "--set", "0", "--name", "maj1")
    assert code == EXIT_USAGE
    assert out == ""
    assert "error:" in err and "UTF-8" in err


def test_non_integer_verify_param_is_an_input_error():
    code, _, err = run("verify", "--prop", "signed-dom", "--nmax", "2", "--param", "k=abc", "--workers", "1")
    assert code == EXIT_USAGE
    assert "parameter 'k' must be an integer" in err


def test_cli_leaves_library_logging_as_it_found_it():
    svc = logging.getLogger("app.services")
    before = (logging.getLogger("app").level, svc.level, svc.propagate, list(svc.handlers))
    run("check", "--graph-spec", "path:1", "--set", "", "--name", "half-dominating")
    after = (logging.getLogger("app").level, svc.level, svc.propagate, list(svc.handlers))
    assert after == before
