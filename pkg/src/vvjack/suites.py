"""Property suites used by ``vvjack verify`` and the acceptance tests.

Each suite returns a list of check records::

    {"name": str, "status": "pass" | "fail", "count": int, "failures": [payload, ...]}

``count`` is the number of individual instances examined; ``failures`` holds
full JSON-ready counterexamples (capped at ``MAX_FAILURES`` per check).
Everything is deterministic: instances are visited in a fixed order and no
timing information is recorded here.
"""

from __future__ import annotations

import itertools
from math import factorial, prod
from typing import Callable, Iterable

from .cherednik import (
    VPoly,
    basis_elements,
    cherednik_u,
    contravariant_form,
    dunkl,
    form_via_gram,
    gram_matrix,
    group_act,
    mult_x,
)
from .combin import (
    compositions,
    enumerate_rsyt,
    hook_data,
    min_antisymmetric_label,
    min_symmetric_label,
    partitions,
    transposition,
    validate_partition,
)
from .exactnum import KAPPA, ONE, ZERO, format_qk, qk
from .irrep import ModuleVector, act_simple, irrep, jm_apply
from .jack import b_coefficient, triangular_oracle, verify_eigen, zeta_norm, zeta_poly
from .symmetrize import (
    f_antisymmetric,
    f_symmetric,
    hook_products,
    norm_antisymmetric,
    norm_symmetric,
)

MAX_FAILURES = 5

SUITES = ("representation", "operator", "jack", "symmetric")


class _Check:
    """Accumulates instances and failures for one named property."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.failures: list[dict] = []
        self.nfail = 0

    def record(self, ok: bool, payload: Callable[[], dict] | dict | None = None) -> None:
        self.count += 1
        if not ok:
            self.nfail += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(payload() if callable(payload) else (payload or {}))

    def result(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.nfail == 0 else "fail", "count": self.count}
        if self.nfail:
            out["failed"] = self.nfail
        out["failures"] = self.failures
        return out


def _coords_json(ctx, coords) -> dict[str, str]:
    return {ctx.tableaux[i].id: format_qk(c) for i, c in sorted(coords.items()) if not c.is_zero()}


# --------------------------------------------------------------------------
# representation suite
# --------------------------------------------------------------------------


def hook_count_check(nmax: int) -> dict:
    """#RSYT(tau) equals N!/prod(hooks) for every partition of N <= nmax."""
    chk = _Check("hook_count")
    for n in range(1, nmax + 1):
        for tau in partitions(n):
            got = len(enumerate_rsyt(tau))
            want = factorial(n) // prod(node.hook for node in hook_data(tau))
            chk.record(got == want, lambda: {"tau": list(tau), "enumerated": got, "hook_formula": want})
    return chk.result()


def representation_suite(tau) -> list[dict]:
    """Braid relations, isometry of s_i for the content form, and JM eigenvalues."""
    tau = validate_partition(tau)
    ctx = irrep(tau)
    n = ctx.N
    basis = [{t: ONE} for t in range(ctx.dim)]
    quad = _Check("involution s_i^2 = 1")
    braid = _Check("braid s_i s_(i+1) s_i = s_(i+1) s_i s_(i+1)")
    commute = _Check("far commutation s_i s_j = s_j s_i")
    iso = _Check("isometry <s_i u, s_i v>_0 = <u, v>_0")
    jm = _Check("Jucys-Murphy eigenvalue omega_i v_T = c(i,T) v_T")
    jmrel = _Check("Jucys-Murphy relations s_i omega_i - omega_(i+1) s_i = 1, omega_i omega_j = omega_j omega_i")

    def app(seq, v):
        for i in reversed(seq):
            v = ctx.apply_simple(i, v)
        return v

    for t, v in enumerate(basis):
        T = ctx.tableaux[t]
        for i in range(1, n):
            got = app([i, i], v)
            quad.record(_same(got, v), lambda: {"tau": list(tau), "tableau": T.id, "i": i, "result": _coords_json(ctx, got)})
            if i + 1 < n:
                lhs, rhs = app([i, i + 1, i], v), app([i + 1, i, i + 1], v)
                braid.record(_same(lhs, rhs), lambda: {"tau": list(tau), "tableau": T.id, "i": i,
                                                       "lhs": _coords_json(ctx, lhs), "rhs": _coords_json(ctx, rhs)})
            for j in range(i + 2, n):
                lhs, rhs = app([i, j], v), app([j, i], v)
                commute.record(_same(lhs, rhs), lambda: {"tau": list(tau), "tableau": T.id, "i": i, "j": j})
        for i in range(1, n + 1):
            # omega_i = sum_{j>i} (i, j), applied literally through permutation matrices
            acc: dict = {}
            for j in range(i + 1, n + 1):
                for k, c in ctx.apply_perm_direct(transposition(n, j, i), v).items():
                    acc[k] = acc.get(k, ZERO) + c
            want = {t: qk(T.c(i))} if T.c(i) != 0 else {}
            jm.record(_same(acc, want), lambda: {"tau": list(tau), "tableau": T.id, "i": i,
                                                 "content": T.c(i), "result": _coords_json(ctx, acc)})
    for t in range(ctx.dim):
        u = ModuleVector(ctx, basis[t])
        om = {i: jm_apply(i, u) for i in range(1, n + 1)}
        for i in range(1, n):
            lhs = act_simple(i, om[i]) - jm_apply(i + 1, act_simple(i, u))
            jmrel.record(lhs == u, lambda: {"tau": list(tau), "tableau": ctx.tableaux[t].id, "i": i,
                                            "result": lhs.to_json()})
        for i, j in itertools.combinations(range(1, n + 1), 2):
            a, b = jm_apply(i, om[j]), jm_apply(j, om[i])
            jmrel.record(a == b, lambda: {"tau": list(tau), "tableau": ctx.tableaux[t].id, "i": i, "j": j})
    for a, b in itertools.combinations_with_replacement(range(ctx.dim), 2):
        u, v = basis[a], basis[b]
        base = ctx.form(u, v)
        for i in range(1, n):
            got = ctx.form(ctx.apply_simple(i, u), ctx.apply_simple(i, v))
            iso.record(got == base, lambda: {"tau": list(tau), "u": ctx.tableaux[a].id, "v": ctx.tableaux[b].id,
                                             "i": i, "expected": format_qk(base), "got": format_qk(got)})
    return [quad.result(), braid.result(), commute.result(), iso.result(), jm.result(), jmrel.result()]


def _same(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all((a.get(k, ZERO) - b.get(k, ZERO)).is_zero() for k in keys)


# --------------------------------------------------------------------------
# operator suite
# --------------------------------------------------------------------------


def _spanning(tau, dmax: int) -> list[VPoly]:
    out = []
    for d in range(dmax + 1):
        for alpha, t in basis_elements(tau, d):
            out.append(VPoly.monomial(tau, alpha, t))
    return out


def _poly_payload(f: VPoly) -> list[dict]:
    return f.to_json_obj()


def _label(f: VPoly) -> dict:
    (alpha, coords), = f.terms.items()
    (t, _), = coords.items()
    return {"alpha": list(alpha), "tableau": f.ctx.tableaux[t].id}


def operator_suite(tau, dmax: int) -> list[dict]:
    """Dunkl commutators, commutativity of D_i and U_i, and the contravariant form axioms."""
    tau = validate_partition(tau)
    ctx = irrep(tau)
    n = ctx.N
    span = _spanning(tau, dmax)
    trans = {(i, j): transposition(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j}

    cross = _Check("[D_i, x_j] = -kappa (i,j) for i != j")
    diag = _Check("[D_i, x_i] = 1 + kappa sum_(j != i) (i,j)")
    dcomm = _Check("D_i D_j = D_j D_i")
    ucomm = _Check("U_i U_j = U_j U_i")
    for f in span:
        dx = {i: dunkl(i, f) for i in range(1, n + 1)}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs = dunkl(i, mult_x(j, f)) - mult_x(j, dx[i])
                if i != j:
                    rhs = group_act(trans[(i, j)], f).scale(-KAPPA)
                    cross.record(lhs == rhs, lambda: {"tau": list(tau), "f": _label(f), "i": i, "j": j,
                                                      "lhs": _poly_payload(lhs), "rhs": _poly_payload(rhs)})
                else:
                    rhs = f
                    for k in range(1, n + 1):
                        if k != i:
                            rhs = rhs + group_act(trans[(i, k)], f).scale(KAPPA)
                    diag.record(lhs == rhs, lambda: {"tau": list(tau), "f": _label(f), "i": i,
                                                     "lhs": _poly_payload(lhs), "rhs": _poly_payload(rhs)})
        for i, j in itertools.combinations(range(1, n + 1), 2):
            a, b = dunkl(i, dx[j]), dunkl(j, dx[i])
            dcomm.record(a == b, lambda: {"tau": list(tau), "f": _label(f), "i": i, "j": j})
        ux = {i: cherednik_u(i, f) for i in range(1, n + 1)}
        for i, j in itertools.combinations(range(1, n + 1), 2):
            a, b = cherednik_u(i, ux[j]), cherednik_u(j, ux[i])
            ucomm.record(a == b, lambda: {"tau": list(tau), "f": _label(f), "i": i, "j": j})
    return [cross.result(), diag.result(), dcomm.result(), ucomm.result()] + form_axioms(tau, dmax)


def form_axioms(tau, dmax: int) -> list[dict]:
    """Axioms of the contravariant form on the monomial spanning set.

    * symmetry of every Gram block,
    * orthogonality of distinct degrees (computed without degree filtering),
    * W-invariance: <w f, w g> = <f, g> for simple w,
    * adjointness <x_i f, g> = <f, D_i g>,
    * self-adjointness of D_i x_i (equivalently of U_i),
    * restriction to degree 0 is the content form on the irrep.
    """
    tau = validate_partition(tau)
    ctx = irrep(tau)
    n = ctx.N
    sym = _Check("form symmetry <f,g> = <g,f>")
    orth = _Check("form degree orthogonality")
    winv = _Check("form W-invariance <s_i f, s_i g> = <f, g>")
    adj = _Check("form adjointness <x_i f, g> = <f, D_i g>")
    selfadj = _Check("form self-adjointness of U_i")
    base = _Check("form degree-0 restriction equals <,>_0")

    for d in range(dmax + 1):
        basis, G = gram_matrix(tau, d)
        m = len(basis)
        for r in range(m):
            for c in range(r, m):
                sym.record(G[r][c] == G[c][r], lambda: {"tau": list(tau), "degree": d, "row": r, "col": c})
        if d == 0:
            for r in range(m):
                for c in range(m):
                    want = ctx.form({basis[r][1]: ONE}, {basis[c][1]: ONE})
                    base.record(G[r][c] == want, lambda: {"tau": list(tau), "row": r, "col": c})
        polys = [VPoly.monomial(tau, a, t) for a, t in basis]
        for i in range(1, n):
            s = transposition(n, i, i + 1)
            imgs = [group_act(s, p) for p in polys]
            for r in range(m):
                for c in range(r, m):
                    got = form_via_gram(imgs[r], imgs[c])
                    winv.record(got == G[r][c], lambda: {"tau": list(tau), "degree": d, "i": i,
                                                        "f": _label(polys[r]), "g": _label(polys[c])})
        for i in range(1, n + 1):
            us = [cherednik_u(i, p) for p in polys]
            for r in range(m):
                for c in range(r, m):
                    a, b = form_via_gram(us[r], polys[c]), form_via_gram(polys[r], us[c])
                    selfadj.record(a == b, lambda: {"tau": list(tau), "degree": d, "i": i,
                                                    "f": _label(polys[r]), "g": _label(polys[c])})
        if d + 1 <= dmax:
            upper = [VPoly.monomial(tau, a, t) for a, t in basis_elements(tau, d + 1)]
            for i in range(1, n + 1):
                dg = [dunkl(i, g) for g in upper]
                for f in polys:
                    xf = mult_x(i, f)
                    for g, dgi in zip(upper, dg):
                        a, b = form_via_gram(xf, g), form_via_gram(f, dgi)
                        adj.record(a == b, lambda: {"tau": list(tau), "i": i, "f": _label(f), "g": _label(g),
                                                    "lhs": format_qk(a), "rhs": format_qk(b)})
    # degree orthogonality: feed all of g through the Dunkl powers
    span = _spanning(tau, dmax)
    for f in span:
        for g in span:
            if f.degree() != g.degree():
                val = contravariant_form(f, g, restrict=False)
                orth.record(val.is_zero(), lambda: {"tau": list(tau), "f": _label(f), "g": _label(g),
                                                    "value": format_qk(val)})
    return [sym.result(), orth.result(), winv.result(), adj.result(), selfadj.result(), base.result()]


# --------------------------------------------------------------------------
# jack suite
# --------------------------------------------------------------------------


def _labels(tau, dmax: int) -> list[tuple[tuple[int, ...], object]]:
    ctx = irrep(tau)
    out = []
    for d in range(dmax + 1):
        for alpha in sorted(compositions(ctx.N, d)):
            for T in ctx.tableaux:
                out.append((alpha, T))
    return out


def jack_suite(tau, dmax: int, oracle: bool = True) -> list[dict]:
    """Eigen-equations, oracle agreement, orthogonality and norms of every zeta_(alpha,T)."""
    tau = validate_partition(tau)
    eig = _Check("zeta eigenfunction U_i zeta = xi_i zeta")
    orc = _Check("zeta equals triangular oracle")
    orth = _Check("zeta pairwise orthogonality")
    nrm = _Check("zeta_norm equals contravariant form")
    sig = _Check("sigma-step law s_i zeta_a = b_i zeta_a + (1 - b_i^2) zeta_(s_i a) for a_i > a_(i+1)")
    n = sum(tau)
    polys = {}
    for alpha, T in _labels(tau, dmax):
        z = zeta_poly(alpha, T)
        polys[(alpha, T.id)] = z
        for i in range(1, n):
            if alpha[i - 1] > alpha[i]:
                s = list(alpha)
                s[i - 1], s[i] = s[i], s[i - 1]
                b = b_coefficient(alpha, T, i)
                lhs = group_act(transposition(n, i, i + 1), z)
                rhs = z.scale(b) + zeta_poly(tuple(s), T).scale(1 - b * b)
                sig.record(lhs == rhs, lambda: {"tau": list(tau), "alpha": list(alpha), "tableau": T.id, "i": i})
        rep = verify_eigen(alpha, T, z)
        eig.record(rep["pass"], rep)
        if oracle:
            o = triangular_oracle(alpha, T)
            orc.record(o == z, lambda: {"tau": list(tau), "alpha": list(alpha), "tableau": T.id,
                                        "recursion": z.to_json_obj(), "oracle": o.to_json_obj()})
        want = zeta_norm(alpha, T)
        got = form_via_gram(z, z)
        nrm.record(got == want, lambda: {"tau": list(tau), "alpha": list(alpha), "tableau": T.id,
                                         "closed_form": format_qk(want), "form": format_qk(got)})
    keys = list(polys)
    for a, b in itertools.combinations(keys, 2):
        if sum(a[0]) != sum(b[0]):
            continue  # different degrees are orthogonal by the form axioms
        val = form_via_gram(polys[a], polys[b])
        orth.record(val.is_zero(), lambda: {"tau": list(tau), "first": {"alpha": list(a[0]), "tableau": a[1]},
                                            "second": {"alpha": list(b[0]), "tableau": b[1]},
                                            "value": format_qk(val)})
    return [eig.result(), orc.result(), orth.result(), nrm.result(), sig.result()]


# --------------------------------------------------------------------------
# symmetric suite
# --------------------------------------------------------------------------


def _bump_last(lam: tuple[int, ...], T, kind: str) -> tuple[int, ...]:
    """A non-minimal label: raise the entries of the last row (s) / last column (a) by one."""
    if kind == "s":
        cells = T.rows[-1]
    else:
        last = len(T.rows[0]) - 1
        cells = [row[last] for row in T.rows if len(row) > last]
    new = list(lam)
    for x in cells:
        new[x - 1] += 1
    return tuple(new)


def symmetric_suite(tau, oracle_degree: int = 6, extra: bool = True) -> list[dict]:
    """Invariance / alternation of f^s, f^a and agreement of the three norm computations.

    The hook-product closed form is compared with the assembled norm for every
    label examined, and with the contravariant-form oracle whenever the
    polynomial degree is at most ``oracle_degree``.
    """
    from .symmetrize import antisymmetric_hook_norm, symmetric_hook_norm

    tau = validate_partition(tau)
    n = sum(tau)
    inv = _Check("f^s is W-invariant")
    alt = _Check("f^a is W-alternating")
    kfree = _Check("minimal f^s, f^a have kappa-free coefficients")
    agree = _Check("norm: hook formula = assembled = form oracle")
    ident = _Check("hook identity P1 P2 / P3 = H^s")
    hp = hook_products(tau)
    ident.record(hp.identity_holds(), lambda: {"tau": list(tau), **hp.as_dict()})

    cases = []
    for kind, getlabel, hook in (("s", min_symmetric_label, symmetric_hook_norm),
                                 ("a", min_antisymmetric_label, antisymmetric_hook_norm)):
        lam, T = getlabel(tau)
        cases.append((kind, tuple(lam), T, hook(tau), True))
        if extra:
            cases.append((kind, _bump_last(tuple(lam), T, kind), T, None, False))
    for kind, lam, T, closed, minimal in cases:
        build = f_symmetric if kind == "s" else f_antisymmetric
        assembled = (norm_symmetric if kind == "s" else norm_antisymmetric)(lam, T)
        f = build(lam, T)
        chk = inv if kind == "s" else alt
        for i in range(1, n):
            g = group_act(transposition(n, i, i + 1), f)
            want = f if kind == "s" else -f
            chk.record(g == want, lambda: {"tau": list(tau), "lambda": list(lam), "tableau": T.id, "i": i})
        if minimal:
            kfree.record(f.is_kappa_free(), lambda: {"tau": list(tau), "kind": kind, "lambda": list(lam)})
        values = {"assembled": assembled}
        if closed is not None:
            values["hook_formula"] = closed
        if sum(lam) <= oracle_degree:
            values["form_oracle"] = contravariant_form(f, f)
        vals = list(values.values())
        agree.record(all(v == vals[0] for v in vals),
                     lambda: {"tau": list(tau), "kind": kind, "lambda": list(lam), "tableau": T.id,
                              **{k: format_qk(v) for k, v in values.items()}})
    return [inv.result(), alt.result(), kfree.result(), agree.result(), ident.result()]


def run_suites(tau, nmax: int, suites: Iterable[str] = SUITES, workers: int = 1) -> list[dict]:
    """Run the named suites for ``tau``; results come back in the order requested."""
    suites = list(suites)
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")

    def one(name: str) -> dict:
        if name == "representation":
            checks = representation_suite(tau)
        elif name == "operator":
            checks = operator_suite(tau, nmax)
        elif name == "jack":
            checks = jack_suite(tau, nmax)
        else:
            checks = symmetric_suite(tau)
        return {"suite": name, "checks": checks}

    if workers > 1 and len(suites) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, suites))
    return [one(s) for s in suites]
