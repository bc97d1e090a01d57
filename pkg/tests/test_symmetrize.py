"""W_lambda-symmetric and -antisymmetric polynomials, hook formulas and the singular scan."""

import itertools
from fractions import Fraction

import pytest

from vvjack.cherednik import VPoly, contravariant_form, form_via_gram, group_act
from vvjack.combin import (
    column_strict,
    conjugate,
    enumerate_rsyt,
    floor_tableau,
    min_antisymmetric_label,
    min_symmetric_label,
    partitions,
    row_strict,
    stabilizer,
    transposition,
)
from vvjack.exactnum import KAPPA as k, KPoly, ONE, ScalarQk, pochhammer
from vvjack.irrep import extremal_tableau
from vvjack.symmetrize import (
    NotColumnStrict,
    NotRowStrict,
    antisymmetric_constant,
    antisymmetric_hook_norm,
    default_candidates,
    f_antisymmetric,
    f_symmetric,
    factored_norm,
    hook_products,
    min_antisymmetric,
    min_symmetric,
    norm_antisymmetric,
    norm_symmetric,
    singular_scan,
    symmetric_constant,
    symmetric_hook_norm,
)


def x(tau, alpha, c=1):
    return VPoly.monomial(tau, alpha, 0, c)


def negate_kappa(s: ScalarQk) -> ScalarQk:
    flip = lambda p: KPoly([c * (-1) ** i for i, c in enumerate(p.coeffs())])
    return ScalarQk(flip(s.num), flip(s.den))


def invariant(f, sign=1):
    n = f.N
    return all(group_act(transposition(n, i, i + 1), f) == f.scale(sign) for i in range(1, n))


def test_single_row_lambda_zero():
    for n in (1, 2, 3, 4):
        T = enumerate_rsyt((n,))[0]
        f = f_symmetric((0,) * n, T)
        assert f == VPoly.monomial((n,), (0,) * n, T)
        assert norm_symmetric((0,) * n, T) == ONE
    with pytest.raises(NotColumnStrict):
        f_symmetric((0, 0, 0), enumerate_rsyt((2, 1))[0])


def test_two_variables():
    T = enumerate_rsyt((2,))[0]
    fs = f_symmetric((1, 0), T)
    assert invariant(fs)
    # proportional to x1 + x2
    c = fs.coefficient((1, 0)).coefficient(T)
    assert fs == (x((2,), (1, 0)) + x((2,), (0, 1))).scale(c)
    fa = f_antisymmetric((1, 0), T)
    c = fa.coefficient((1, 0)).coefficient(T)
    assert fa == (x((2,), (1, 0)) - x((2,), (0, 1))).scale(c)
    assert norm_antisymmetric((1, 0), T) == 2 * (1 + 2 * k)
    assert contravariant_form(fa, fa) == 2 * (1 + 2 * k)


def test_sign_representation():
    T = enumerate_rsyt((1, 1))[0]
    f = f_antisymmetric((0, 0), T)
    assert f == VPoly.monomial((1, 1), (0, 0), T)
    assert invariant(f, -1)
    with pytest.raises(NotRowStrict):
        f_antisymmetric((0, 0), enumerate_rsyt((2,))[0])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vandermonde(n):
    f, norm = min_antisymmetric((n,))
    vdm = x((n,), (0,) * n)
    for i, j in itertools.combinations(range(n), 2):
        ei = tuple(int(m == i) for m in range(n))
        ej = tuple(int(m == j) for m in range(n))
        vdm = _mul_linear(vdm, ei, ej)
    assert f == vdm
    expect = antisymmetric_constant((n,))
    for i in range(2, n + 1):
        expect = expect * pochhammer(1 + i * k, i - 1)
    assert norm == expect
    assert contravariant_form(f, f) == expect


def _mul_linear(f, ei, ej):
    """f * (x_i - x_j) for unit exponent vectors ei, ej."""
    out = {}
    for alpha, coords in f.terms.items():
        for e, s in ((ei, 1), (ej, -1)):
            beta = tuple(a + b for a, b in zip(alpha, e))
            acc = out.setdefault(beta, {})
            for t, c in coords.items():
                acc[t] = acc.get(t, 0 * c) + c * s
    return VPoly(f.ctx, out)


def test_hook_products():
    for n in range(1, 6):
        hp = hook_products((n,))
        assert hp.P1 == hp.P2 == hp.P3 == hp.Hs == ONE
    assert hook_products((2, 1)).Hs == 1 - 3 * k
    for n in range(1, 7):
        for tau in partitions(n):
            assert hook_products(tau).identity_holds()


def test_golden_532():
    assert symmetric_constant((5, 3, 2)) == Fraction(441, 4)
    assert antisymmetric_constant((5, 3, 2)) == 28350
    assert factored_norm((5, 3, 2), "s") == "441/4*(1-7*k)_2*(1-6*k)_2*(1-4*k)^2*(1-3*k)"
    assert factored_norm((5, 3, 2), "a") == "28350*(1+7*k)_4*(1+6*k)_3*(1+4*k)_2^2*(1+3*k)*(1+2*k)^2"
    s = symmetric_hook_norm((5, 3, 2)) / symmetric_constant((5, 3, 2))
    assert s == (pochhammer(1 - 7 * k, 2) * pochhammer(1 - 6 * k, 2) * (1 - 4 * k) ** 2 * (1 - 3 * k))
    _, norm = min_symmetric((5, 3, 2), build=False)
    assert norm == symmetric_hook_norm((5, 3, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_triple_agreement(n):
    for tau in partitions(n):
        for kind in "sa":
            build = min_symmetric if kind == "s" else min_antisymmetric
            lam, T = (min_symmetric_label if kind == "s" else min_antisymmetric_label)(tau)
            f, closed = build(tau)
            assembled = (norm_symmetric if kind == "s" else norm_antisymmetric)(lam, T)
            assert closed == assembled == contravariant_form(f, f)
            assert invariant(f, 1 if kind == "s" else -1)
            assert f.is_kappa_free()


def test_conjugation_duality():
    for n in range(1, 7):
        for tau in partitions(n):
            tc = conjugate(tau)
            a = antisymmetric_hook_norm(tau) / antisymmetric_constant(tau)
            s = symmetric_hook_norm(tc) / symmetric_constant(tc)
            assert a == negate_kappa(s)
            assert min_antisymmetric_label(tau)[0] == min_symmetric_label(tc)[0]


def _labels(tau, degree, strict):
    """Distinct (lambda, canonical T0) labels of the given degree."""
    n = sum(tau)
    seen = {}
    for lam in partitions(degree):
        if len(lam) > n:
            continue
        lam = lam + (0,) * (n - len(lam))
        H = stabilizer(lam)
        for T in enumerate_rsyt(tau):
            if strict(floor_tableau(lam, T)):
                T0 = extremal_tableau(T, H, "cm")
                seen[(lam, T0.id)] = (lam, T0)
    return list(seen.values())


@pytest.mark.parametrize("tau", [(2, 1), (3, 1), (2, 2)])
def test_families_are_orthogonal_and_invariant(tau):
    for d in range(0, 4):
        for strict, build, sign, norm in ((column_strict, f_symmetric, 1, norm_symmetric),
                                          (row_strict, f_antisymmetric, -1, norm_antisymmetric)):
            labels = _labels(tau, d, strict)
            polys = [build(lam, T) for lam, T in labels]
            for (lam, T), f in zip(labels, polys):
                assert invariant(f, sign)
                assert form_via_gram(f, f) == norm(lam, T)
            for f, g in itertools.combinations(polys, 2):
                assert form_via_gram(f, g).is_zero()


def test_default_candidates():
    assert default_candidates((2,)) == [Fraction(-1, 2), Fraction(1, 2)]
    cands = default_candidates((3, 1))
    assert Fraction(1, 4) in cands and all(c.denominator > 1 for c in cands)


def test_singular_scan_two_variables():
    rep = singular_scan((2,), 1, [Fraction(-1, 2), 0, Fraction(1, 2)])
    cor = {(c["kappa"], c["degree"]): c["corank"] for c in rep["cells"]}
    assert cor[("-1/2", 1)] == 1
    assert cor[("0", 1)] == 0 and cor[("0", 0)] == 0
    summary = {s["kappa"]: s for s in rep["summary"]}
    assert summary["-1/2"]["singular_evidence"] and summary["-1/2"]["first_degree"] == 1
    rep = singular_scan((1, 1), 1, [Fraction(1, 2)])
    assert [c["corank"] for c in rep["cells"]] == [0, 1]


def test_singular_scan_positive_at_zero():
    for tau in [(3,), (2, 1), (1, 1, 1)]:
        rep = singular_scan(tau, 2, [0])
        assert [c["corank"] for c in rep["cells"]] == [0, 0, 0]
        assert [c["dimension"] for c in rep["cells"]] == [len(enumerate_rsyt(tau)) * m for m in (1, 3, 6)]
        assert not rep["summary"][0]["singular_evidence"]
