"""Nonsymmetric vector-valued Jack polynomials zeta_(alpha,T)."""

import itertools

import pytest

from vvjack import jack
from vvjack.cherednik import VPoly, contravariant_form, form_via_gram, group_act
from vvjack.combin import compositions, enumerate_rsyt, partitions, rank, transposition
from vvjack.exactnum import KAPPA as k, ONE
from vvjack.irrep import irrep, norm0
from vvjack.jack import (
    MemoBudgetExceeded,
    b_coefficient,
    e2,
    e_product,
    spectral,
    triangular_oracle,
    verify_eigen,
    zeta,
    zeta_norm,
    zeta_poly,
)

T2 = enumerate_rsyt((2,))[0]


def x(tau, alpha, T=0, c=1):
    return VPoly.monomial(tau, alpha, T, c)


def test_spectral_examples():
    T = enumerate_rsyt((2, 1))[0]
    assert spectral((0, 0, 0), T) == tuple(1 + k * T.c(i) for i in (1, 2, 3))
    assert spectral((1, 0), T2) == (2 + k, ONE)
    assert spectral((0, 1), T2) == (ONE, 2 + k)


def test_zeta_examples():
    for T in enumerate_rsyt((2, 1)):
        assert zeta_poly((0, 0, 0), T) == VPoly.monomial((2, 1), (0, 0, 0), T)
    assert zeta_poly((0, 1), T2) == x((2,), (0, 1))
    assert zeta_poly((1, 0), T2) == x((2,), (1, 0)) + x((2,), (0, 1)).scale(k / (1 + k))
    z = zeta((1, 0), T2)
    assert z.norm == (1 + 2 * k) / (1 + k)


def test_e_products():
    assert e_product("+", (2, 1, 0), enumerate_rsyt((3,))[0]) == ONE
    assert e_product(-1, (0, 1), T2) == 1 / (1 + k)
    assert e_product(+1, (0, 1), T2) == (1 + 2 * k) / (1 + k)
    assert e2((0, 1), T2) == e_product(1, (0, 1), T2) * e_product(-1, (0, 1), T2)


@pytest.mark.parametrize("tau", [(3,), (2, 1), (2, 2), (3, 1)])
def test_e_ratio_law(tau):
    """E_eps(s_i alpha)/E_eps(alpha) = 1 + eps b_i(alpha) when alpha_i > alpha_(i+1).

    Going the other way (alpha_i < alpha_(i+1)) the ratio is 1/(1 - eps b_i(alpha)).
    """
    n = sum(tau)
    for T in enumerate_rsyt(tau):
        for alpha in compositions(n, 3):
            for i in range(1, n):
                if alpha[i - 1] == alpha[i]:
                    continue
                s = list(alpha)
                s[i - 1], s[i] = s[i], s[i - 1]
                b = b_coefficient(alpha, T, i)
                for eps in (1, -1):
                    lhs = e_product(eps, tuple(s), T) / e_product(eps, alpha, T)
                    if alpha[i - 1] > alpha[i]:
                        assert lhs == 1 + eps * b
                    else:
                        assert lhs == 1 / (1 - eps * b)


def test_zeta_norm_examples():
    for T in enumerate_rsyt((2, 1)):
        assert zeta_norm((0, 0, 0), T) == norm0(T)
    assert zeta_norm((1, 0), T2) == (1 + 2 * k) / (1 + k)
    assert zeta_norm((0, 1), T2) == 1 + k
    assert contravariant_form(x((2,), (0, 1)), x((2,), (0, 1))) == 1 + k


def test_verify_eigen_and_negative_control():
    T = enumerate_rsyt((2, 1))[1]
    assert verify_eigen((0, 0, 0), T)["pass"]
    assert verify_eigen((1, 0, 2), T)["pass"]
    bad = zeta_poly((1, 0, 2), T) + x((2, 1), (0, 2, 1), 0)
    rep = verify_eigen((1, 0, 2), T, bad)
    assert not rep["pass"] and rep["failing"]


def test_oracle_examples():
    for T in enumerate_rsyt((2, 1)):
        assert triangular_oracle((0, 0, 0), T) == VPoly.monomial((2, 1), (0, 0, 0), T)
        assert triangular_oracle((1, 0, 0), T) == zeta_poly((1, 0, 0), T)
    assert triangular_oracle((1, 0), T2) == zeta_poly((1, 0), T2)


@pytest.mark.parametrize("tau", [(3,), (2, 1), (1, 1, 1), (3, 1), (2, 2)])
def test_sigma_step_path_independence(tau):
    """zeta_alpha = (s_i + b_i) zeta_(s_i alpha) for every descent i, not only the one the recursion uses."""
    n = sum(tau)
    for T in enumerate_rsyt(tau):
        for d in range(1, 4):
            for alpha in compositions(n, d):
                for i in range(1, n):
                    if alpha[i - 1] > alpha[i]:
                        s = list(alpha)
                        s[i - 1], s[i] = s[i], s[i - 1]
                        prev = zeta_poly(tuple(s), T)
                        via = group_act(transposition(n, i, i + 1), prev) + prev.scale(b_coefficient(alpha, T, i))
                        assert via == zeta_poly(alpha, T)


@pytest.mark.parametrize("tau", [(2, 1), (3, 1), (2, 1, 1)])
def test_phi_step(tau):
    """zeta_(phi(alpha)) = x_N theta^-1 zeta_alpha and its norm relation."""
    from vvjack.cherednik import mult_x
    from vvjack.combin import phi

    n = sum(tau)
    theta_inv = (n,) + tuple(range(1, n))
    for T in enumerate_rsyt(tau):
        for alpha in compositions(n, 2):
            z = zeta_poly(alpha, T)
            assert zeta_poly(phi(alpha), T) == mult_x(n, group_act(theta_inv, z))
            ratio = zeta_norm(phi(alpha), T) / zeta_norm(alpha, T)
            assert ratio == alpha[0] + 1 + k * T.c(rank(alpha, 1))


@pytest.mark.parametrize("tau", [(2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_equal_exponent_rules(tau):
    """s_i zeta for alpha_i = alpha_(i+1): the four seminormal cases at I = r(alpha, i)."""
    n = sum(tau)
    ctx = irrep(tau)
    seen = set()
    for T in ctx.tableaux:
        for d in range(0, 3):
            for alpha in compositions(n, d):
                for i in range(1, n):
                    if alpha[i - 1] != alpha[i]:
                        continue
                    I = rank(alpha, i)
                    z = zeta_poly(alpha, T)
                    lhs = group_act(transposition(n, i, i + 1), z)
                    b = ctx.b_value(I, T)
                    if b == 1:
                        rhs, case = z, 1
                    elif b == -1:
                        rhs, case = -z, 2
                    else:
                        other = zeta_poly(alpha, T.swap(I))
                        if b < 0:
                            rhs, case = z.scale(b) + other.scale(1 - b * b), 3
                            assert zeta_norm(alpha, T) == (1 - b * b) * zeta_norm(alpha, T.swap(I))
                        else:
                            rhs, case = z.scale(b) + other, 4
                    assert lhs == rhs
                    seen.add(case)
    assert seen >= {1, 2} and seen & {3, 4}


@pytest.mark.parametrize("n", [2, 3])
def test_sweep_against_oracle_and_form(n):
    for tau in partitions(n):
        for T in enumerate_rsyt(tau):
            labels = [a for d in range(4) for a in compositions(n, d)]
            polys = {a: zeta_poly(a, T) for a in labels}
            for a in labels:
                assert verify_eigen(a, T, polys[a])["pass"]
                assert triangular_oracle(a, T) == polys[a]
                assert contravariant_form(polys[a], polys[a]) == zeta_norm(a, T)
            for a, b in itertools.combinations(labels, 2):
                if sum(a) == sum(b):
                    assert form_via_gram(polys[a], polys[b]).is_zero()


def test_memo_budget():
    jack.clear_memo()
    try:
        jack.set_memo_budget(3)
        with pytest.raises(MemoBudgetExceeded):
            zeta_poly((2, 1, 1), enumerate_rsyt((3,))[0])
    finally:
        jack.set_memo_budget(jack.DEFAULT_MEMO_BUDGET)
        jack.clear_memo()
    assert zeta_poly((2, 1, 1), enumerate_rsyt((3,))[0]) is not None
    assert jack.memo_size((3,)) > 0
