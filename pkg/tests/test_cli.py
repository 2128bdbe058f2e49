import json

import pytest

from uqplus.cli import evaluate, main, shuffle_expression
from uqplus.free import FreeElement


def test_shuffle_command(capsys):
    assert main(["shuffle", "x * y"]) == 0
    assert capsys.readouterr().out.strip() == "xy + (q^-2)*yx"
    assert main(["shuffle", "xz * y"]) == 2


def test_shuffle_expression():
    assert shuffle_expression("e * xy") == FreeElement.word("xy")
    with pytest.raises(ValueError):
        shuffle_expression("x * ")


def test_eval_normal_form(capsys):
    assert main(["eval", "W[1] W[0]"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "(1 - q^-2)*G[1] + (-1 + q^-2)*Gt[1] + W[0] W[1]"
    assert main(["eval", "H[1]"]) == 2


def test_eval_named_elements():
    assert str(evaluate("Ed(1)")) == "(-1 + q^-4)*xy"
    assert str(evaluate("Z(1)")) == "(q + q^-1)*e (*) z1"
    assert str(evaluate("scalar((q^2 - q^-2)/(q - q^-1))")) == "q + q^-1"
    assert str(evaluate("image(G[1])")) == "yx + e (*) z1"
    with pytest.raises(ValueError):
        evaluate("nope(1)")


def test_list(capsys):
    assert main(["--list"]) == 0
    out = capsys.readouterr().out
    assert "qserre" in out and "rewrite-oracle" in out


def test_verify_writes_report_and_figure(tmp_path, capsys):
    out = tmp_path / "sub" / "report.json"
    code = main(["verify", "--check", "qserre,zvee-image", "--out", str(out), "--quiet"])
    assert code == 0
    data = json.loads(out.read_text())
    assert [d["status"] for d in data] == ["pass", "pass"]
    png = out.with_suffix(".png")
    assert png.exists() and png.read_bytes()[:4] == b"\x89PNG"


def test_verify_markdown_to_stdout(capsys):
    assert main(["verify", "--check", "qserre", "--report", "md", "--quiet"]) == 0
    assert "| qserre | pass |" in capsys.readouterr().out


def test_verify_bounds_reach_checks(capsys):
    assert main(["verify", "--check", "pbw-independence", "--max-degree", "3",
                 "--order", "appendix", "--quiet"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data[0]["params"] == {"grade_bound": 3, "order": "appendix"}


def test_verify_unknown_check():
    with pytest.raises(SystemExit):
        main(["verify", "--check", "bogus"])


def test_failing_check_sets_exit_code(monkeypatch, capsys):
    from uqplus import checks, free
    checks.clear_caches()
    monkeypatch.setattr(free, "_weight_sign", -1)
    try:
        assert main(["verify", "--check", "zvee-image", "--quiet"]) == 1
    finally:
        monkeypatch.undo()
        checks.clear_caches()
    data = json.loads(capsys.readouterr().out)
    assert data[0]["status"] == "fail" and "counterexample" in data[0]
