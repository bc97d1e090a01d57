"""Symmetric and antisymmetric elements of M(tau) and their norms.

For a partition lam (length N) and a tableau T0 with ``floor(lam, T0)``
column-strict::

    f^s = sum_{alpha^+ = lam} sum_{T in Y(T0; W_lam)} prod_j P0(T; a_j, b_j) E_-(alpha, T) zeta_{alpha,T}

and for ``floor(lam, T0)`` row-strict::

    f^a = sum_{alpha^+ = lam} (-1)^inv(alpha) sum_T prod_j P1(T; a_j, b_j) E_+(alpha, T) zeta_{alpha,T}

The minimal-degree members f^s_tau, f^a_tau have closed-form norms::

    ||f^s_tau||^2 = (N!/prod tau_i!)  norm0(T^s) prod_{cells} (1 - k h)_{leg}
    ||f^a_tau||^2 = (N!/prod tau'_j!) norm0(T^a) prod_{cells} (1 + k h)_{arm}

where W_{delta^s} permutes the entries of each row of T^s (order
prod tau_i!) and W_{delta^a} those of each column of T^a.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Sequence

import flint

from .combin import (RSYT, column_strict, conjugate, floor_tableau, hook_data, inv_count,
                     min_antisymmetric_label, min_symmetric_label, rearrangements, row_strict,
                     stabilizer, validate_partition)
from .cherednik import VPoly, _add_vec, gram_matrix
from .exactnum import KAPPA, ONE, PoleAtKappa, ScalarQk, format_qk, pochhammer, qk, qk_eval
from .irrep import (_p_product, antisymmetric_vector, extremal_tableau, invariant_vector,
                    irrep, orbit)
from .jack import e_product, zeta_norm, zeta_poly

__all__ = [
    "HookProducts",
    "NotColumnStrict",
    "NotRowStrict",
    "antisymmetric_constant",
    "antisymmetric_hook_norm",
    "antisymmetric_hook_product",
    "default_candidates",
    "factored_norm",
    "f_antisymmetric",
    "f_symmetric",
    "hook_products",
    "min_antisymmetric",
    "min_symmetric",
    "norm_antisymmetric",
    "norm_symmetric",
    "singular_scan",
    "symmetric_constant",
    "symmetric_hook_norm",
    "symmetric_hook_product",
]


class NotColumnStrict(ValueError):
    """floor(lam, T0) is not column-strict."""


class NotRowStrict(ValueError):
    """floor(lam, T0) is not row-strict."""


def _lam(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != n:
        raise ValueError(f"lambda must have {n} entries, got {len(lam)}")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)) or (lam and lam[-1] < 0):
        raise ValueError(f"{lam} is not a partition")
    return lam


def _label(lam, T0: RSYT, kind: str):
    lam = _lam(lam, T0.N)
    grid = floor_tableau(lam, T0)
    if kind == "s" and not column_strict(grid):
        raise NotColumnStrict(f"floor({lam}, {T0!r}) is not column-strict")
    if kind == "a" and not row_strict(grid):
        raise NotRowStrict(f"floor({lam}, {T0!r}) is not row-strict")
    H = stabilizer(lam)
    return lam, H, extremal_tableau(T0, H, "cm")


def _family(lam, T0: RSYT, kind: str) -> VPoly:
    lam, H, T0 = _label(lam, T0, kind)
    ctx = irrep(T0.shape)
    sign = 1 if kind == "s" else -1
    members = []
    for T in orbit(T0, H):
        w = Fraction(1)
        for a, b in H:
            w *= _p_product(T, a, b, sign)
        members.append((T, qk(w)))
    out = VPoly(ctx)
    for alpha in rearrangements(lam):
        parity = -1 if (kind == "a" and inv_count(alpha) % 2) else 1
        for T, w in members:
            coef = w * e_product(-sign, alpha, T)
            if parity < 0:
                coef = -coef
            z = zeta_poly(alpha, T)
            for e, coords in z.terms.items():
                _add_vec(out.terms, e, coords, coef)
    return out


def f_symmetric(lam: Sequence[int], T0: RSYT) -> VPoly:
    """The S_N-invariant f^s_{lam,T0}; T0 may be any member of its W_lam-orbit."""
    return _family(lam, T0, "s")


def f_antisymmetric(lam: Sequence[int], T0: RSYT) -> VPoly:
    """The S_N-alternating f^a_{lam,T0}."""
    return _family(lam, T0, "a")


def _assembled_norm(lam, T0: RSYT, kind: str) -> ScalarQk:
    lam, H, T0 = _label(lam, T0, kind)
    ctx = irrep(T0.shape)
    u = invariant_vector(T0, H) if kind == "s" else antisymmetric_vector(T0, H)
    u_norm = ctx.form(u.coords, u.coords)
    v_norm = ctx.norms_qk[ctx.index[T0]]
    lam_r = tuple(reversed(lam))
    e = e_product(1 if kind == "s" else -1, lam_r, T0)
    ratio = qk(Fraction(factorial(T0.N), H.order))
    return ratio * u_norm / (e * v_norm) * zeta_norm(lam, T0)


def norm_symmetric(lam: Sequence[int], T0: RSYT) -> ScalarQk:
    """(N!/#W_lam) ||u||_0^2 / (E_+(lam^R, T0) ||v_T0||_0^2) ||zeta_{lam,T0}||^2."""
    return _assembled_norm(lam, T0, "s")


def norm_antisymmetric(lam: Sequence[int], T0: RSYT) -> ScalarQk:
    """(N!/#W_lam) ||u||_0^2 / (E_-(lam^R, T0) ||v_T0||_0^2) ||zeta_{lam,T0}||^2."""
    return _assembled_norm(lam, T0, "a")


# -- hook products -----------------------------------------------------------

class HookProducts:
    __slots__ = ("P1", "P2", "P3", "Hs")

    def __init__(self, P1: ScalarQk, P2: ScalarQk, P3: ScalarQk, Hs: ScalarQk):
        self.P1, self.P2, self.P3, self.Hs = P1, P2, P3, Hs

    def identity_holds(self) -> bool:
        return self.P1 * self.P2 / self.P3 == self.Hs

    def as_dict(self) -> dict[str, str]:
        return {k: format_qk(getattr(self, k)) for k in self.__slots__}

    def __repr__(self) -> str:
        return f"HookProducts({self.as_dict()})"


def hook_products(tau) -> HookProducts:
    """P1, P2, P3 and H^s, each computed from its own defining product."""
    tau = validate_partition(tau)
    L = len(tau)
    P1 = ONE
    for i in range(2, L + 1):
        for j in range(1, tau[i - 1] + 1):
            P1 = P1 * pochhammer(ONE + KAPPA * (j - i), i - 1)
    P2 = ONE
    P3 = ONE
    k2 = KAPPA * KAPPA
    for i in range(1, L + 1):
        for j in range(i + 1, L + 1):
            for j1 in range(1, tau[i - 1] + 1):
                for j2 in range(1, tau[j - 1] + 1):
                    shift = j2 - j1 - j + i
                    for r in range(1, j - i + 1):
                        d = qk(r) + KAPPA * shift
                        P2 = P2 * (ONE - k2 / (d * d))
                    P3 = P3 * (ONE + KAPPA / (qk(j - i) + KAPPA * shift))
    Hs = symmetric_hook_product(tau)
    return HookProducts(P1, P2, P3, Hs)


def symmetric_hook_product(tau) -> ScalarQk:
    """prod over cells of (1 - k h)_{leg}."""
    out = ONE
    for node in hook_data(tau):
        out = out * pochhammer(ONE - KAPPA * node.hook, node.leg)
    return out


def antisymmetric_hook_product(tau) -> ScalarQk:
    """prod over cells of (1 + k h)_{arm}."""
    out = ONE
    for node in hook_data(tau):
        out = out * pochhammer(ONE + KAPPA * node.hook, node.arm)
    return out


def symmetric_constant(tau) -> ScalarQk:
    """c0 = (N!/prod tau_i!) norm0(T^s)."""
    tau = validate_partition(tau)
    _, Ts = min_symmetric_label(tau)
    ctx = irrep(tau)
    return qk(Fraction(factorial(sum(tau)), prod(factorial(t) for t in tau))) * ctx.norms_qk[ctx.index[Ts]]


def antisymmetric_constant(tau) -> ScalarQk:
    """c1 = (N!/prod tau'_j!) norm0(T^a)."""
    tau = validate_partition(tau)
    _, Ta = min_antisymmetric_label(tau)
    ctx = irrep(tau)
    return qk(Fraction(factorial(sum(tau)), prod(factorial(t) for t in conjugate(tau)))) * ctx.norms_qk[ctx.index[Ta]]


def symmetric_hook_norm(tau) -> ScalarQk:
    return symmetric_constant(tau) * symmetric_hook_product(tau)


def antisymmetric_hook_norm(tau) -> ScalarQk:
    return antisymmetric_constant(tau) * antisymmetric_hook_product(tau)


def _factored(const: ScalarQk, tau, kind: str) -> str:
    """Human-readable factorisation, e.g. '3*(1-7k)_2*(1-4k)^2'."""
    counts: dict[tuple[int, int], int] = {}
    for node in hook_data(tau):
        length = node.leg if kind == "s" else node.arm
        if length:
            counts[(node.hook, length)] = counts.get((node.hook, length), 0) + 1
    sgn = "-" if kind == "s" else "+"
    parts = [format_qk(const)]
    for (h, length), mult in sorted(counts.items(), key=lambda x: (-x[0][0], -x[0][1])):
        base = f"(1{sgn}{h}*k)" if length == 1 else f"(1{sgn}{h}*k)_{length}"
        parts.append(base if mult == 1 else f"{base}^{mult}")
    return "*".join(parts)


def min_symmetric(tau, build: bool = True) -> tuple[VPoly | None, ScalarQk]:
    """(f^s_tau, ||f^s_tau||^2) with the norm from the hook formula; build=False skips the polynomial."""
    tau = validate_partition(tau)
    lam, Ts = min_symmetric_label(tau)
    f = f_symmetric(lam, Ts) if build else None
    return f, symmetric_hook_norm(tau)


def min_antisymmetric(tau, build: bool = True) -> tuple[VPoly | None, ScalarQk]:
    tau = validate_partition(tau)
    lam, Ta = min_antisymmetric_label(tau)
    f = f_antisymmetric(lam, Ta) if build else None
    return f, antisymmetric_hook_norm(tau)


def factored_norm(tau, kind: str) -> str:
    tau = validate_partition(tau)
    const = symmetric_constant(tau) if kind == "s" else antisymmetric_constant(tau)
    return _factored(const, tau, kind)


# -- singular-value scan -------------------------------------------------------

def default_candidates(tau) -> list[Fraction]:
    """n/m with m a hook length of tau, n/m not an integer and |n| <= max hook."""
    tau = validate_partition(tau)
    hooks = sorted({node.hook for node in hook_data(tau)})
    hmax = hooks[-1]
    out = set()
    for m in hooks:
        for n in range(-hmax, hmax + 1):
            q = Fraction(n, m)
            if q.denominator != 1:
                out.add(q)
    return sorted(out)


def _rank_at(G, k0: Fraction) -> tuple[int | None, list[tuple[int, int]]]:
    n = len(G)
    poles = []
    vals = []
    for r in range(n):
        row = []
        for c in range(n):
            try:
                v = qk_eval(G[r][c], k0)
            except PoleAtKappa:
                poles.append((r, c))
                v = Fraction(0)
            row.append(flint.fmpq(v.numerator, v.denominator))
        vals.extend(row)
    if poles:
        return None, poles
    if n == 0:
        return 0, []
    return flint.fmpq_mat(n, n, vals).rank(), []


def singular_scan(tau, degree_max: int, candidates: Iterable | None = None, workers: int = 1) -> dict:
    """Gram-matrix corank of the contravariant form on each M_d(tau), d <= degree_max, at each candidate k0."""
    tau = validate_partition(tau)
    cands = sorted({Fraction(c) for c in (candidates if candidates is not None else default_candidates(tau))})
    grams = {d: gram_matrix(tau, d)[1] for d in range(degree_max + 1)}
    hs = symmetric_hook_product(tau)
    ha = antisymmetric_hook_product(tau)
    cells = [(k0, d) for k0 in cands for d in range(degree_max + 1)]

    def run(cell):
        k0, d = cell
        rank, poles = _rank_at(grams[d], k0)
        n = len(grams[d])
        entry = {"kappa": str(k0), "degree": d, "dimension": n,
                 "corank": None if rank is None else n - rank}
        if poles:
            entry["poles"] = [list(p) for p in poles]
        return entry

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, cells))
    else:
        rows = [run(c) for c in cells]
    summary = []
    for k0 in cands:
        mine = [r for r in rows if r["kappa"] == str(k0)]
        summary.append({
            "kappa": str(k0),
            "singular_evidence": any((r["corank"] or 0) > 0 for r in mine),
            "first_degree": next((r["degree"] for r in mine if (r["corank"] or 0) > 0), None),
            "symmetric_hook_zero": qk_eval(hs, k0) == 0,
            "antisymmetric_hook_zero": qk_eval(ha, k0) == 0,
        })
    return {"tau": list(tau), "degree_max": degree_max, "cells": rows, "summary": summary}
