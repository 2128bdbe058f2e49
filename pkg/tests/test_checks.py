import json

import pytest

from uqplus import checks, free, pbw
from uqplus.report import to_json, to_markdown


def test_registry_contents():
    assert set(checks.CHECK_ORDER) == set(checks.REGISTRY)
    for name in ["qserre", "damiani-rr", "gf-uqp", "uce-relations", "uce-rr", "rewrite-oracle",
                 "pbw-independence", "zvee", "compare", "factorization", "main-theorem",
                 "recover", "zvee-image"]:
        assert name in checks.REGISTRY
        assert checks.REGISTRY[name].anchor


def test_unknown_check():
    with pytest.raises(KeyError):
        checks.run_check("no-such-check")


def test_passing_spec_fields():
    spec = checks.run_check("zvee-image")
    assert spec.passed()
    assert spec.counterexample is None
    assert spec.params == {"n_bound": 4}
    assert spec.max_terms > 0 and spec.identities == 5


def test_params_override():
    spec = checks.run_check("zvee-image", n_bound=2, unrelated=7)
    assert spec.params == {"n_bound": 2}
    assert spec.identities == 3


def test_failure_reports_first_coefficient():
    checks.clear_caches()
    free._weight_sign = -1
    try:
        spec = checks.run_check("zvee-image")
    finally:
        free._weight_sign = 1
        checks.clear_caches()
    assert spec.status == "fail"
    assert "Z1 image: nonzero at term" in spec.counterexample
    assert "first suspect" in spec.counterexample


def test_rule_perturbation_is_caught():
    pbw.set_perturbation((pbw.PbwOrder.MAIN, "WpWm", "first"))
    try:
        spec = checks.run_check("rewrite-oracle", quick=True, order="main")
    finally:
        pbw.set_perturbation(None)
    assert spec.status == "fail"
    assert spec.counterexample.startswith("main: W[1] W[0]")
    assert checks.run_check("rewrite-oracle", quick=True, order="main").passed()


def test_context_describes_series():
    from uqplus.scalar import ONE, ZERO
    from uqplus.series import Series1
    ctx = checks.Context({})
    with pytest.raises(checks.CheckFailed, match="t\\^2"):
        ctx.zero("demo", Series1([ZERO, ZERO, ONE]))


def test_reports():
    specs = [checks.run_check("qserre"), checks.run_check("zvee-image")]
    data = json.loads(to_json(specs))
    assert [d["name"] for d in data] == ["qserre", "zvee-image"]
    for d in data:
        assert {"name", "anchor", "params", "status", "millis", "max_terms"} <= set(d)
        assert "counterexample" not in d
    md = to_markdown(specs)
    assert "2 of 2 checks passed" in md
    assert "| qserre | pass |" in md
