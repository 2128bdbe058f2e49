import pytest

from uqplus import checks


@pytest.mark.parametrize("name", ["gf-uqp", "uce-rr", "compare", "recover", "zvee-image"])
def test_check_passes(name):
    spec = checks.run_check(name)
    assert spec.passed(), spec.counterexample


@pytest.mark.parametrize("name,params", [("damiani-rr", {"index_bound": 2}),
                                         ("uce-relations", {"index_bound": 2, "N": 3}),
                                         ("main-theorem", {"N": 3}),
                                         ("factorization", {"N": 3, "N2": 2, "index_bound": 2})])
def test_small_bounds(name, params):
    spec = checks.run_check(name, **params)
    assert spec.passed(), spec.counterexample
    for k, v in params.items():
        assert spec.params[k] == v
