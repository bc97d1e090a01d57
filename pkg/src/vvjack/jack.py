"""Vector-valued nonsymmetric Jack polynomials zeta_{alpha,T}.

``zeta(alpha, T)`` is the simultaneous eigenfunction of U_1..U_N with
eigenvalues ``xi_i = alpha_i + 1 + k c(r(alpha,i), T)`` and leading term
``x^alpha w_alpha v_T``.  It is built by the Yang-Baxter recursion

* phi-step (alpha_N >= 1):  zeta_alpha = x_N theta^{-1} zeta_beta,
  beta = (alpha_N - 1, alpha_1, ..., alpha_{N-1});
* sigma-step (alpha_N = 0): with i the last index where alpha_i > 0,
  zeta_alpha = s_i zeta_{s_i alpha} + b_i(alpha,T) zeta_{s_i alpha},
  b_i(alpha,T) = k/(xi_i(alpha,T) - xi_{i+1}(alpha,T)).

Results are memoised per shape under an explicit entry budget.
:func:`triangular_oracle` recomputes the same polynomial by linear algebra on
the monomial basis and is used to cross-check the recursion.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .combin import (RSYT, compositions, dominance_lt, rank_vector, sorting_permutation,
                     validate_partition)
from .cherednik import VPoly, _add_vec, cherednik_u, group_act, monomial_key
from .exactnum import KAPPA, ONE, ZERO, ScalarQk, pochhammer, qk
from .irrep import irrep

__all__ = [
    "JackPoly",
    "MemoBudgetExceeded",
    "TooLarge",
    "b_coefficient",
    "clear_memo",
    "e2",
    "e_product",
    "memo_size",
    "set_memo_budget",
    "spectral",
    "triangular_oracle",
    "verify_eigen",
    "zeta",
    "zeta_norm",
    "zeta_poly",
]

DEFAULT_MEMO_BUDGET = 500_000


class MemoBudgetExceeded(RuntimeError):
    """The per-shape memo table would exceed its configured entry budget."""


class TooLarge(ValueError):
    """The dense oracle was asked for a space above its size guard."""


def _env_budget() -> int:
    try:
        return int(os.environ.get("VVJACK_MEMO_BUDGET", DEFAULT_MEMO_BUDGET))
    except ValueError:
        return DEFAULT_MEMO_BUDGET


_memo: dict[tuple[int, ...], dict[tuple[tuple[int, ...], int], VPoly]] = {}
_memo_lock = threading.Lock()
_budget = [_env_budget()]


def set_memo_budget(n: int) -> None:
    if n <= 0:
        raise ValueError("memo budget must be positive")
    _budget[0] = int(n)


def clear_memo() -> None:
    with _memo_lock:
        _memo.clear()


def memo_size(tau=None) -> int:
    if tau is None:
        return sum(len(t) for t in _memo.values())
    return len(_memo.get(validate_partition(tau), {}))


def _tindex(tau, T) -> int:
    ctx = irrep(tau)
    return ctx.lookup(T)


# -- spectral data ---------------------------------------------------------

def spectral(alpha: Sequence[int], T: RSYT) -> tuple[ScalarQk, ...]:
    """(xi_1, ..., xi_N) with xi_i = alpha_i + 1 + k c(r(alpha,i), T)."""
    r = rank_vector(alpha)
    return tuple(qk(alpha[i] + 1) + KAPPA * T.content[r[i]] for i in range(len(alpha)))


def b_coefficient(alpha: Sequence[int], T: RSYT, i: int) -> ScalarQk:
    """b_i(alpha,T) = k/(xi_i - xi_{i+1}); requires alpha_i != alpha_{i+1}."""
    r = rank_vector(alpha)
    diff = qk(alpha[i - 1] - alpha[i]) + KAPPA * (T.content[r[i - 1]] - T.content[r[i]])
    return KAPPA / diff


def e_product(sign: int | str, alpha: Sequence[int], T: RSYT) -> ScalarQk:
    """E_sign(alpha,T) = prod over i<j with alpha_i<alpha_j of 1 + sign*k/(alpha_j-alpha_i + k(c(r_j)-c(r_i)))."""
    eps = _sign(sign)
    r = rank_vector(alpha)
    c = T.content
    out = ONE
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] < alpha[j]:
                den = qk(alpha[j] - alpha[i]) + KAPPA * (c[r[j]] - c[r[i]])
                out = out * (ONE + KAPPA * eps / den)
    return out


def e2(alpha: Sequence[int], T: RSYT) -> ScalarQk:
    return e_product(1, alpha, T) * e_product(-1, alpha, T)


def _sign(sign) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "−", "minus"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


def zeta_norm(alpha: Sequence[int], T: RSYT) -> ScalarQk:
    """Closed-form <zeta, zeta>: E_2(alpha,T)^{-1} ||zeta_{alpha^+,T}||^2 with the product formula for partitions."""
    lam = tuple(sorted(alpha, reverse=True))
    c = T.content
    n = len(lam)
    ctx = irrep(T.shape)
    out = ctx.norms_qk[ctx.index[T]]
    for i in range(1, n + 1):
        if lam[i - 1]:
            out = out * pochhammer(ONE + KAPPA * c[i], lam[i - 1])
    k2 = KAPPA * KAPPA
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for l in range(1, lam[i - 1] - lam[j - 1] + 1):
                d = qk(l) + KAPPA * (c[i] - c[j])
                out = out * (ONE - k2 / (d * d))
    if tuple(alpha) != lam:
        out = out / e2(alpha, T)
    return out


# -- recursion ---------------------------------------------------------------

def _theta_inverse(n: int) -> tuple[int, ...]:
    return (n,) + tuple(range(1, n))


def _simple(n: int, i: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = i + 1, i
    return tuple(w)


def _parent(alpha: tuple[int, ...]):
    n = len(alpha)
    if alpha[-1] >= 1:
        return "phi", (alpha[-1] - 1,) + alpha[:-1], None
    for i in range(n - 1, 0, -1):
        if alpha[i - 1] > 0:
            s = list(alpha)
            s[i - 1], s[i] = s[i], s[i - 1]
            return "sigma", tuple(s), i
    raise AssertionError("zero composition has no parent")


def zeta_poly(alpha: Sequence[int], T: RSYT | int | str, tau=None) -> VPoly:
    """The polynomial zeta_{alpha,T} (memoised)."""
    if isinstance(T, RSYT):
        tau = T.shape
    if tau is None:
        raise ValueError("shape required when T is given by id or index")
    tau = validate_partition(tau)
    ctx = irrep(tau)
    t = ctx.lookup(T)
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != ctx.N or any(a < 0 for a in alpha):
        raise ValueError(f"composition {alpha} does not have {ctx.N} nonnegative entries")
    table = _memo.setdefault(tau, {})
    key = (alpha, t)
    hit = table.get(key)
    if hit is not None:
        return hit
    Tt = ctx.tableaux[t]
    n = ctx.N
    # iterative post-order walk down the recursion tree
    stack = [alpha]
    while stack:
        a = stack[-1]
        if (a, t) in table:
            stack.pop()
            continue
        if not any(a):
            result = VPoly(ctx, {a: {t: ONE}})
        else:
            kind, parent, i = _parent(a)
            prev = table.get((parent, t))
            if prev is None:
                stack.append(parent)
                continue
            if kind == "phi":
                moved = group_act(_theta_inverse(n), prev)
                result = VPoly(ctx)
                result.terms = {b[:-1] + (b[-1] + 1,): c for b, c in moved.terms.items()}
            else:
                b = b_coefficient(a, Tt, i)
                result = group_act(_simple(n, i), prev)
                for e, coords in prev.terms.items():
                    _add_vec(result.terms, e, coords, b)
        stack.pop()
        with _memo_lock:
            if len(table) >= _budget[0]:
                raise MemoBudgetExceeded(
                    f"memo for shape {tau} reached its budget of {_budget[0]} entries")
            table.setdefault((a, t), result)
    return table[key]


@dataclass
class JackPoly:
    alpha: tuple[int, ...]
    T: RSYT
    poly: VPoly
    _norm: ScalarQk | None = field(default=None, repr=False)

    @property
    def spectral(self) -> tuple[ScalarQk, ...]:
        return spectral(self.alpha, self.T)

    @property
    def norm(self) -> ScalarQk:
        if self._norm is None:
            self._norm = zeta_norm(self.alpha, self.T)
        return self._norm

    def leading_vector(self):
        return self.poly.coefficient(self.alpha)


def zeta(alpha: Sequence[int], T: RSYT) -> JackPoly:
    return JackPoly(tuple(alpha), T, zeta_poly(alpha, T))


# -- verification ------------------------------------------------------------

def verify_eigen(alpha: Sequence[int], T: RSYT, poly: VPoly | None = None) -> dict:
    """Check U_i f = xi_i(alpha,T) f for every i; f defaults to zeta_{alpha,T}."""
    f = poly if poly is not None else zeta_poly(alpha, T)
    xi = spectral(alpha, T)
    failing = []
    for i in range(1, len(alpha) + 1):
        if cherednik_u(i, f) != f.scale(xi[i - 1]):
            failing.append(i)
    return {"alpha": list(alpha), "tableau": T.id, "pass": not failing, "failing": failing}


@lru_cache(maxsize=32)
def _u_columns(tau: tuple[int, ...], d: int):
    """U_i images of every monomial basis element x^beta v_t of degree d, split by exponent."""
    ctx = irrep(tau)
    cols = {}
    for beta in compositions(ctx.N, d):
        for t in range(ctx.dim):
            g = VPoly(ctx, {beta: {t: ONE}})
            cols[(beta, t)] = [cherednik_u(i, g).terms for i in range(1, ctx.N + 1)]
    return cols


def _solve_stacked(rows: list[list[ScalarQk]], rhs: list[ScalarQk], nvars: int) -> list[ScalarQk]:
    """Solve an overdetermined but consistent system over Q(k); raise if inconsistent or singular."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_row = 0
    pivots = []
    for col in range(nvars):
        sel = next((r for r in range(piv_row, len(m)) if not m[r][col].is_zero()), None)
        if sel is None:
            raise ArithmeticError("oracle system is singular")
        m[piv_row], m[sel] = m[sel], m[piv_row]
        inv = m[piv_row][col].inverse()
        m[piv_row] = [x * inv for x in m[piv_row]]
        for r in range(len(m)):
            if r != piv_row and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv_row])]
        pivots.append(piv_row)
        piv_row += 1
    for r in range(piv_row, len(m)):
        if not m[r][-1].is_zero():
            raise ArithmeticError("oracle system is inconsistent")
    return [m[p][-1] for p in pivots]


def triangular_oracle(alpha: Sequence[int], T: RSYT, size_max: int = 400) -> VPoly:
    """Independent construction of zeta_{alpha,T} from the matrices of U_1..U_N on the monomial basis.

    Unknown coefficients g_beta (beta strictly below alpha) are found from
    the top down, one exponent at a time, by solving the stacked equations
    (U_i - xi_i) f = 0 restricted to x^beta.
    """
    alpha = tuple(alpha)
    tau = T.shape
    ctx = irrep(tau)
    n, dim = ctx.N, ctx.dim
    d = sum(alpha)
    nbasis = len(compositions(n, d)) * dim
    if nbasis > size_max:
        raise TooLarge(f"degree-{d} space of M{tau} has dimension {nbasis} > {size_max}")
    xi = spectral(alpha, T)
    cols = _u_columns(tau, d)
    lead = ctx.apply_perm(sorting_permutation(alpha), {ctx.index[T]: ONE})
    solution: dict[tuple, dict[int, ScalarQk]] = {alpha: lead}
    # acc[i][beta] = V-vector: contribution of already-fixed terms to (U_i - xi_i) f at x^beta
    acc: list[dict] = [dict() for _ in range(n)]

    def push(beta, coords):
        for (t, c) in coords.items():
            for i in range(n):
                for gamma, img in cols[(beta, t)][i].items():
                    if gamma != beta and not dominance_lt(gamma, beta):
                        raise ArithmeticError(f"U_{i + 1} is not triangular at {beta}")
                    _add_vec(acc[i], gamma, img, c)
                _add_vec(acc[i], beta, {t: c}, -xi[i])

    push(alpha, lead)
    for i in range(n):
        if acc[i].get(alpha):
            raise ArithmeticError("leading term is not an eigenvector of the diagonal block")
    lower = sorted((b for b in compositions(n, d) if dominance_lt(b, alpha)), key=monomial_key)
    for beta in lower:
        rows, rhs = [], []
        for i in range(n):
            known = acc[i].get(beta, {})
            for s in range(dim):
                row = []
                for t in range(dim):
                    entry = cols[(beta, t)][i].get(beta, {}).get(s, ZERO)
                    if s == t:
                        entry = entry - xi[i]
                    row.append(entry)
                rows.append(row)
                rhs.append(-known.get(s, ZERO))
        g = _solve_stacked(rows, rhs, dim)
        coords = {t: c for t, c in enumerate(g) if not c.is_zero()}
        if coords:
            solution[beta] = coords
            push(beta, coords)
    return VPoly(ctx, solution)
