import json
import math

import pytest

import dcclass


def test_sequences_and_conditions():
    g = dcclass.gevrey(1.0, 50)
    assert g.n_max == 50
    assert g[3] == pytest.approx(math.log(27.0))
    assert dcclass.check_log_convex(g).holds
    assert dcclass.check_condition_A(g, 1.0)
    bad = dcclass.explicit([0.0, 2.0, 2.0, 2.0], 3)
    rep = dcclass.check_log_convex(bad)
    assert not rep.holds
    assert rep.first_violation == [1]


def test_errors_map_to_exceptions():
    with pytest.raises(dcclass.InvalidArgument):
        dcclass.gevrey(0.5, 10)
    with pytest.raises(dcclass.BudgetExceeded):
        dcclass.construct_counterexample("power-n", 2, 2)


def test_gorny_and_certify():
    assert dcclass.gorny_bound(0.0, 0.0, 2, 1, 2 * math.pi) == pytest.approx(math.log(4 * math.e**2))
    assert dcclass.verify_gorny_empirical("sine", 0.0, 2 * math.pi, 2, 1).holds
    assert dcclass.log_c1(2, 1.0, 1.0, math.log(4.0)) == pytest.approx(math.log(8.0) + 1.0, abs=1e-12)
    M = dcclass.gevrey(1.0, 20)
    orders = [2, 4, 8, 16]
    cert = dcclass.certify_membership(M, orders, [M[d] for d in orders], 1.0, 1.0)
    assert cert.c0 == 2
    assert cert.envelope[0].order == 2
    with pytest.raises(dcclass.HypothesisFailure):
        dcclass.certify_membership(M, orders, [M[d] + 1.0 for d in orders], 1.0, 1.0)


def test_counterexample_and_extremal():
    cert = dcclass.construct_counterexample("power-n", 2, 1)
    assert cert.d == [8]
    assert dcclass.verify_counterexample(cert, "power-n").holds
    s = dcclass.ExtremalSeries([0.0] * 41, -0.5, 0.5, 40)
    assert dcclass.eval_derivative(s, 0, 0.0) == pytest.approx(2.0)
    assert dcclass.check_upper_bound(s, 1, 512)[0]
    assert dcclass.check_midpoint_lower(s, 3)[0]


def test_cli_entry():
    code, out, err = dcclass.run_cli(["check", "--family", "gevrey", "--s", "1", "--n-max", "30", "--m0", "1"])
    assert code == 0 and err == ""
    assert json.loads(out)["condition_A"]["holds"] is True
