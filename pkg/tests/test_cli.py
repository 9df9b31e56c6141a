import io
import json

import pytest

from smmv.cli import main

KEYS = {"command", "inputs", "verdict", "witness", "stats", "symbolic_assumptions", "details", "elapsed"}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    rep = json.loads(text)
    assert set(rep) == KEYS
    assert set(rep["stats"]) == {"cases", "samples", "seed"}
    return code, rep


def test_decide_invalid_has_witness():
    code, rep = run_json("decide", "--name", "lin_tau")
    assert code == 1 and rep["verdict"] == "invalid"
    assert set(rep["witness"]["assignment"]) == {"x", "y"}
    assert rep["stats"]["cases"] > 0


def test_decide_valid():
    code, rep = run_json("decide", "tau(~x) = ~tau(x)")
    assert code == 0 and rep["verdict"] == "valid" and rep["witness"] is None


@pytest.mark.parametrize("argv", [["decide", "x + = y"], ["decide"], ["classify", "Q(3)"], ["reproduce", "nope"], ["bogus"]])
def test_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    code, text = run(*argv, "--json")
    assert code == 2
    rep = json.loads(text)
    assert rep["verdict"] == "error" and rep["details"]["error"]


def test_budget_gives_unknown():
    code, rep = run_json("decide", "--name", "b2", "--budget-cases", "2")
    assert code == 2 and rep["verdict"] == "unknown"


def test_classify_examples():
    assert run_json("classify", "D(S(2))")[1]["verdict"] == "D"
    assert run_json("classify", "S(4)", "--tau", "id")[1]["verdict"] == "I"
    rep = run_json("classify", "Ex41")[1]
    assert rep["verdict"] == "L" and rep["details"]["k_flag"] is False


def test_enumerate_examples():
    assert run_json("enumerate", "prod(S(1),S(1))")[1]["details"]["count"] == 3
    rep = run_json("enumerate", "S(2)")[1]
    assert rep["details"]["operators"] == [{"tau": "{0->0, 1->1, 2->2}", "si": True, "type": "I"}]
    rep = run_json("enumerate", "prod(S(2),S(2))")[1]
    assert "D" in {row["type"] for row in rep["details"]["operators"]}
    assert run("enumerate", "prod(S(5),S(5))", "--max-size", "20")[0] == 2


def test_check_examples():
    code, rep = run_json("check", "A({3})", "--tau", "std", "--name", "c_p", "--p", "3", "--samples", "10000", "--seed", "0")
    assert code == 0 and rep["verdict"] == "sampled-pass" and rep["stats"]["samples"] == 10000
    code, rep = run_json("check", "A({2})", "--tau", "std", "--name", "c_p", "--p", "3", "--at", "x=1/3+e")
    assert code == 1 and rep["verdict"] == "fails"
    assert rep["details"]["left"] == "1" and rep["details"]["right"] == "1-3e"
    code, rep = run_json("check", "D(S(2))", "--tau", "diag", "--name", "c")
    assert code == 0 and rep["verdict"] == "holds" and rep["details"]["scope"] == "exhaustive"


def test_tau_table_file(tmp_path):
    table = tmp_path / "tau.json"
    table.write_text(json.dumps({"0": "0", "1": "2", "2": "2"}))
    code, rep = run_json("check", "S(2)", "--tau", str(table), "tau(x) = x")
    # mapping 1 to 2 is not additive, so the table is rejected
    assert code == 2
    table.write_text(json.dumps({"0": "0", "1": "1", "2": "2"}))
    code, rep = run_json("check", "S(2)", "--tau", str(table), "tau(x) = x")
    assert code == 0 and rep["verdict"] == "holds"
    assert run("classify", "S(2)", "--tau", str(tmp_path / "missing.json"))[0] == 2


def test_reports_are_deterministic():
    a = run_json("check", "I", "--tau", "id", "--name", "c", "--samples", "200", "--seed", "3")[1]
    b = run_json("check", "I", "--tau", "id", "--name", "c", "--samples", "200", "--seed", "3")[1]
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_plain_text_output():
    code, text = run("decide", "x \\/ ~x = 1")
    assert code == 1
    assert "verdict: invalid" in text and "witness:" in text


def test_reproduce_suite():
    code, rep = run_json("reproduce", "independence")
    assert code == 0 and rep["verdict"] == "pass"
    assert [c["criterion"] for c in rep["details"]["criteria"]] == [4]
    assert rep["symbolic_assumptions"]
