"""One test per acceptance criterion; each starts from cold caches and is timed."""

import time

import pytest

from uqplus import checks
from uqplus.model import ModelElement, z_index
from uqplus.series import Series1


def cold_run(name, limit_s, **params):
    checks.clear_caches()
    spec = checks.run_check(name, **params)
    assert spec.status == "pass", spec.counterexample
    assert spec.millis < limit_s * 1000, f"{name} took {spec.millis:.0f} ms"
    return spec


def test_1_qserre():
    cold_run("qserre", 1)


def test_2_damiani_rr():
    spec = cold_run("damiani-rr", 60)
    assert spec.params["index_bound"] == 4


def test_3_uce_relations():
    spec = cold_run("uce-relations", 60)
    assert spec.params["index_bound"] == 4


def test_4_zvee():
    spec = cold_run("zvee", 60)
    assert spec.params["n_bound"] == 5 and spec.params["index_bound"] == 4


def test_5_factorization():
    spec = cold_run("factorization", 120)
    assert spec.params["N"] == 5


def test_6_main_theorem():
    spec = cold_run("main-theorem", 300)
    assert spec.params["N"] == 6


def test_7_rewrite_oracle():
    spec = cold_run("rewrite-oracle", 300)
    assert spec.params["index_bound"] == 3 and spec.params["order"] == "both"


def test_8_pbw_independence():
    spec = cold_run("pbw-independence", 120)
    assert spec.params["grade_bound"] == 6 and spec.params["order"] == "both"


def test_9_mutation_self_test():
    start = time.perf_counter()
    results = checks.self_test()
    elapsed = time.perf_counter() - start
    assert len(results) == 1 + 12 * 3
    missed = [r.mutation for r in results if r.detected_by is None]
    assert not missed
    assert elapsed < 120


def test_10_series_example():
    start = time.perf_counter()
    z = lambda *idx: _zmono(idx)
    a = Series1([ModelElement.one()] + [z(k) for k in range(1, 5)])
    b = a.inverse()
    assert b[1] == -z(1)
    assert b[2] == z(1, 1) - z(2)
    assert b[3] == z(1, 2) * 2 - z(1, 1, 1) - z(3)
    assert b[4] == z(1, 1, 1, 1) + z(1, 3) * 2 + z(2, 2) - z(1, 1, 2) * 3 - z(4)
    assert time.perf_counter() - start < 1


def _zmono(idx):
    m = ModelElement.one()
    for i in idx:
        m = m * ModelElement.basis("", z_index(i))
    return m
