"""Suite runner: determinism, report shape, failure surfacing."""

import pytest

from symfact import verify


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        verify.run_suite("nope")


def test_report_shape():
    report = verify.run_suite("ode", max_weight=2, n=2, seed=3)
    assert report["suite"] == "ode"
    assert report["params"] == {"max_weight": 2, "n": 2, "seed": 3}
    assert report["counts"]["total"] == len(report["checks"])
    assert report["passed"]


def test_deterministic_for_fixed_seed():
    a = verify.run_suite("eigen", max_weight=2, n=2, seed=5)
    b = verify.run_suite("eigen", max_weight=2, n=2, seed=5)
    assert a == b


def test_failure_carries_counterexample():
    rep = verify.Reporter()
    rep.record("good", True)
    rep.record("bad identity", False, detail="witness")
    out = rep.report("demo", {})
    assert not out["passed"]
    assert out["first_counterexample"]["name"] == "bad identity"
    assert out["counts"] == {"total": 2, "failed": 1}


def test_all_runs_every_suite():
    report = verify.run_suite("all", max_weight=1, n=2, seed=0)
    names = " ".join(c["name"] for c in report["checks"])
    for marker in ("eigenrelation", "separation", "inverse", "annihilates", "lifting", "border"):
        assert marker in names


def test_random_symmetric_is_symmetric():
    import random

    f = verify.random_symmetric(3, 4, random.Random(0), basis="s")
    assert f.is_symmetric()
