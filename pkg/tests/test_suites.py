"""The property suites themselves: pass on real data, fail on broken data."""

import pytest

from vvjack import suites
from vvjack.cherednik import VPoly


def statuses(checks):
    return {c["name"]: c["status"] for c in checks}


@pytest.mark.parametrize("tau", [(3,), (2, 1), (1, 1, 1), (2, 2)])
def test_suites_pass(tau):
    for rep in suites.run_suites(tau, 2):
        for c in rep["checks"]:
            assert c["status"] == "pass", c
            assert c["failures"] == []


def test_hook_count_check():
    rep = suites.hook_count_check(6)
    assert rep["status"] == "pass" and rep["count"] == 1 + 2 + 3 + 5 + 7 + 11


def test_jack_suite_detects_a_broken_polynomial(monkeypatch):
    real = suites.zeta_poly

    def broken(alpha, T, tau=None):
        f = real(alpha, T)
        if tuple(alpha) == (1, 0, 0):
            f = f + VPoly.monomial(T.shape, (0, 0, 1), T)
        return f

    monkeypatch.setattr(suites, "zeta_poly", broken)
    checks = suites.jack_suite((2, 1), 1)
    st = statuses(checks)
    assert st["zeta eigenfunction U_i zeta = xi_i zeta"] == "fail"
    assert st["zeta equals triangular oracle"] == "fail"
    failing = [c for c in checks if c["status"] == "fail"]
    assert all(c["failures"] for c in failing)


def test_run_suites_order_and_workers():
    a = suites.run_suites((2, 1), 1, ["symmetric", "representation"])
    b = suites.run_suites((2, 1), 1, ["symmetric", "representation"], workers=2)
    assert [r["suite"] for r in a] == ["symmetric", "representation"]
    assert a == b
    with pytest.raises(ValueError):
        suites.run_suites((2,), 1, ["nope"])
