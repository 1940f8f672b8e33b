import json

import pytest

from fgt.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_list_is_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "catalog", "list")
    code2, out2, _ = run_cli(capsys, "catalog", "list")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "Dihedral(4)\t8\tD4" in out1


def test_group_info_trivial_group(capsys):
    code, out, _ = run_cli(capsys, "group", "info", "Cyclic(1)")
    assert code == 0
    doc = json.loads(out)
    assert doc["orderProfile"]["order"] == 1
    assert doc["predicates"]["pnc"] is True


def test_predicate_pnc_dihedral_8_prints_false(capsys):
    code, out, _ = run_cli(capsys, "predicate", "is_pnc", "Dihedral(8)")
    assert code == 0
    assert out.strip() == "false"


def test_predicate_subgroup_level(capsys):
    code, out, _ = run_cli(capsys, "predicate", "is_nc", "Sym(3)", "--subgroup", "1")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(capsys, "predicate", "is_normal", "Sym(3)", "--subgroup", "1")
    assert code == 0 and out.strip() == "false"


def test_predicate_usage_errors(capsys):
    code, _, err = run_cli(capsys, "predicate", "is_nc", "Sym(3)")
    assert code == 2 and "subgroup" in err
    code, _, err = run_cli(capsys, "predicate", "is_everything", "Sym(3)")
    assert code == 2
    code, _, err = run_cli(capsys, "predicate", "is_pnc", "Wat(3)")
    assert code == 2 and "unknown constructor" in err


def test_check_single_claim_pass(capsys):
    code, out, _ = run_cli(capsys, "check", "dihedral-iff")
    assert code == 0
    assert "| dihedral-iff | pass | 38 |" in out


def test_check_failing_claim_gives_exit_one(capsys):
    # gu23-remarks is the documented impossible conjunction
    code, out, _ = run_cli(capsys, "check", "gu23-remarks", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["claims"][0]["verdict"] == "fail"


def test_check_report_writes_json_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "check", "dicyclic-iff", "--report", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["claims"][0]["id"] == "dicyclic-iff"


def test_lattice_json_and_dot(capsys):
    code, out, _ = run_cli(capsys, "lattice", "Sym(3)")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["subgroups"]) == 6
    code, out, _ = run_cli(capsys, "lattice", "Sym(3)", "--dot")
    assert code == 0
    assert out.startswith("digraph") and "doublecircle" in out


def test_lattice_budget_exhaustion_exit_three(capsys):
    code, _, err = run_cli(capsys, "lattice", "Sym(5)", "--max-subgroups", "3")
    assert code == 3 and "budget" in err


def test_order_cap_flag_limits_builds(capsys):
    code, _, err = run_cli(capsys, "group", "info", "Sym(5)", "--order-cap", "100")
    assert code == 3


def test_search_with_range_universe(capsys):
    code, out, _ = run_cli(capsys, "search", "pnc", "--universe", "Dihedral(3..6)")
    assert code == 0
    doc = json.loads(out)
    assert doc["matches"] == ["Dihedral(3)", "Dihedral(5)", "Dihedral(6)"]


def test_search_bad_expression_exit_two(capsys):
    code, _, err = run_cli(capsys, "search", "pnc ^ dedekind", "--universe", "Sym(3)")
    assert code == 2


def test_usage_error_exit_two(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2
    assert run_cli(capsys, "check")[0] == 2


def test_env_order_cap_override(monkeypatch, capsys):
    monkeypatch.setenv("FGT_ORDER_CAP", "50")
    code, _, _ = run_cli(capsys, "group", "info", "Sym(5)")
    assert code == 3
    monkeypatch.setenv("FGT_ORDER_CAP", "99999")
    code, _, err = run_cli(capsys, "group", "info", "Sym(3)")
    assert code == 2  # above the hard limit
