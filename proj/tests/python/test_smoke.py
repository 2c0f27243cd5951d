"""Smoke tests for the Python bindings."""

import pytest

import ergopt

RENEWAL = {"family": "renewal"}
LINEAR = {"family": "linear", "a": 1}
FULL = {"family": "full"}
F2 = {"family": "capped-diff", "a": 1, "cap": 1}


def test_solve_renewal():
    report = ergopt.solve(RENEWAL, LINEAR, "1/2")
    assert report["beta"] == "0/1"
    assert report["orbit"] == [0]
    assert report["reduction"]["hull2"]["symbols"] == [0]
    assert report["reduction"]["tail_gap"] == "1/2"
    assert report["reduction"]["certified"] is True


def test_solve_capped_diff():
    report = ergopt.solve(FULL, F2, "1/2")
    assert report["beta"] == "0/1"
    assert report["reduction"]["hull2"]["symbols"] == [0, 1, 2]
    assert report["reduction"]["tail_gap"] == "1/1"


def test_float_mode_close_to_rational():
    exact = ergopt.solve(RENEWAL, LINEAR, "1/2")
    approx = ergopt.solve(RENEWAL, LINEAR, "1/2", mode="float")
    assert approx["mode"] == "float"
    assert abs(approx["beta"] - eval_fraction(exact["beta"])) <= 1e-9


def eval_fraction(text):
    num, den = text.split("/")
    return int(num) / int(den)


def test_max_mean_cycle():
    value, cycle = ergopt.max_mean_cycle(2, [(0, 0, "2"), (0, 1, "5"), (1, 0, "1")])
    assert value == "3/1"
    assert cycle == [0, 1]
    assert ergopt.max_mean_cycle(2, [(0, 1, "1")]) is None


def test_splice_improves_the_average():
    out = ergopt.splice(RENEWAL, LINEAR, "1/2", [0, 1])
    assert out["spliced"] == [0]
    assert out["gain"] == "1/4"


def test_reduce_real_and_grid():
    tent = {"family": "abs-linear", "a": 1, "center": 1}
    red = ergopt.reduce_real(tent, "1/2", 0)
    assert red["cut1"] == "3/2"
    assert red["cut2"] == "1001/500"
    grid = ergopt.grid_solve(tent, 2, 5)
    assert grid["beta_hat"] == "0/1"


def test_verify_campaign_passes():
    report = ergopt.verify(RENEWAL, LINEAR, "1/2", cases=50, seed=3)
    assert report["pass"] is True
    assert all(p["failures"] == 0 for p in report["properties"])


def test_errors_are_typed():
    with pytest.raises(ergopt.CertificationError):
        ergopt.solve(FULL, {"family": "constant", "c": 0}, "1/2")
    with pytest.raises(ValueError):
        ergopt.solve({"family": "no-such"}, LINEAR, "1/2")
