"""The standard module M(tau) = P (x) V_tau with Dunkl and Cherednik operators.

A :class:`VPoly` is a sparse map from exponent tuples (compositions of
length N) to V_tau coordinates ``{tableau index: ScalarQk}``.

Dunkl operator::

    D_i(p u) = (d/dx_i p) u + k * sum_{j != i} (p(x) - p(x(i,j)))/(x_i - x_j) (i,j)u

Cherednik operator::

    U_i p = D_i(x_i p) - k * sum_{j < i} (i,j) p

The contravariant form is defined by the constant-term pairing
``<x^a u, g> = <u, (D^a g)(0)>_0``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .combin import RSYT, compositions, transposition, validate_partition
from .exactnum import KAPPA, ONE, ZERO, ScalarQk, format_qk, parse_qk, qk, qk_eval
from .irrep import IrrepContext, ModuleVector, _add_into, irrep

__all__ = [
    "VPoly",
    "basis_elements",
    "cherednik_u",
    "contravariant_form",
    "divided_difference",
    "dunkl",
    "gram_matrix",
    "group_act",
    "monomial_key",
    "mult_x",
    "scalar_divided_difference",
    "specialize",
]

Exp = tuple  # composition


def monomial_key(alpha: Sequence[int]) -> tuple:
    """Sort key: degree ascending, then (alpha^+, alpha) descending.

    Within one degree this is a linear extension of the dominance order, with
    dominating exponents first.
    """
    plus = tuple(sorted(alpha, reverse=True))
    return (sum(alpha), tuple(-a for a in plus), tuple(-a for a in alpha))


def _add_vec(acc: dict, alpha: Exp, coords: Mapping[int, ScalarQk], scale: ScalarQk | int | None = None) -> None:
    slot = acc.get(alpha)
    if slot is None:
        slot = acc[alpha] = {}
    for t, c in coords.items():
        _add_into(slot, t, c if scale is None else c * scale)
    if not slot:
        del acc[alpha]


class VPoly:
    """An element of M(tau): sum of x^alpha u_alpha with u_alpha in V_tau."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: IrrepContext, terms: Mapping[Exp, Mapping[int, ScalarQk]] | None = None):
        self.ctx = ctx
        clean = {}
        for alpha, coords in (terms or {}).items():
            if len(alpha) != ctx.N:
                raise ValueError(f"exponent {alpha} has length {len(alpha)}, expected {ctx.N}")
            nz = {t: c for t, c in coords.items() if not c.is_zero()}
            if nz:
                clean[tuple(alpha)] = nz
        self.terms = clean

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, tau) -> "VPoly":
        return cls(irrep(tau))

    @classmethod
    def monomial(cls, tau, alpha: Sequence[int], T: RSYT | int | str, coeff=1) -> "VPoly":
        ctx = irrep(tau)
        return cls(ctx, {tuple(alpha): {ctx.lookup(T): qk(coeff)}})

    @classmethod
    def from_vector(cls, alpha: Sequence[int], u: ModuleVector) -> "VPoly":
        return cls(u.ctx, {tuple(alpha): dict(u.coords)})

    # -- basic structure -----------------------------------------------
    @property
    def tau(self) -> tuple[int, ...]:
        return self.ctx.tau

    @property
    def N(self) -> int:
        return self.ctx.N

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(a) for a in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "VPoly":
        return VPoly(self.ctx, {a: c for a, c in self.terms.items() if sum(a) == d})

    def coefficient(self, alpha: Sequence[int]) -> ModuleVector:
        return ModuleVector(self.ctx, self.terms.get(tuple(alpha), {}))

    def support(self) -> list[Exp]:
        return sorted(self.terms, key=monomial_key)

    def scalar_coefficients(self) -> Iterable[ScalarQk]:
        for coords in self.terms.values():
            yield from coords.values()

    def is_kappa_free(self) -> bool:
        return all(c.is_constant() for c in self.scalar_coefficients())

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "VPoly") -> None:
        if self.ctx is not other.ctx and self.ctx.tau != other.ctx.tau:
            raise ValueError(f"shapes differ: {self.tau} vs {other.tau}")

    def __add__(self, other: "VPoly") -> "VPoly":
        self._check(other)
        acc = {a: dict(c) for a, c in self.terms.items()}
        for a, c in other.terms.items():
            _add_vec(acc, a, c)
        out = VPoly(self.ctx)
        out.terms = acc
        return out

    def __neg__(self) -> "VPoly":
        return self.scale(-1)

    def __sub__(self, other: "VPoly") -> "VPoly":
        return self + other.scale(-1)

    def scale(self, s) -> "VPoly":
        s = qk(s)
        if s.is_zero():
            return VPoly(self.ctx)
        out = VPoly(self.ctx)
        out.terms = {a: {t: c * s for t, c in coords.items()} for a, coords in self.terms.items()}
        return out

    def __rmul__(self, s) -> "VPoly":
        return self.scale(s)

    def __eq__(self, other) -> bool:
        return isinstance(other, VPoly) and self.tau == other.tau and self.terms == other.terms

    def __hash__(self):
        raise TypeError("VPoly is not hashable")

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in self.support():
            for t, c in sorted(self.terms[a].items()):
                parts.append(f"({format_qk(c)})x^{list(a)}v[{self.ctx.tableaux[t].id}]")
        return " + ".join(parts)

    # -- interchange ---------------------------------------------------
    def to_json_obj(self) -> list[dict]:
        out = []
        for a in self.support():
            coords = self.terms[a]
            out.append({
                "alpha": list(a),
                "coeff": {self.ctx.tableaux[t].id: format_qk(c) for t, c in sorted(coords.items())},
            })
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, tau, data) -> "VPoly":
        if isinstance(data, str):
            data = json.loads(data)
        ctx = irrep(tau)
        terms: dict = {}
        for item in data:
            alpha = tuple(int(a) for a in item["alpha"])
            coords = {ctx.lookup(k): parse_qk(v) for k, v in item["coeff"].items()}
            _add_vec(terms, alpha, coords)
        return cls(ctx, terms)


# -- monomial-level helpers --------------------------------------------------

@lru_cache(maxsize=200_000)
def scalar_divided_difference(alpha: Exp, i: int, j: int) -> tuple[tuple[Exp, int], ...]:
    """(x^alpha - x^{(i,j)alpha})/(x_i - x_j) as ((exponent, +-1), ...); i, j are 1-based."""
    a, b = alpha[i - 1], alpha[j - 1]
    if a == b:
        return ()
    out = []
    base = list(alpha)
    if a > b:
        for s in range(a - b):
            base[i - 1], base[j - 1] = a - 1 - s, b + s
            out.append((tuple(base), 1))
    else:
        for s in range(b - a):
            base[i - 1], base[j - 1] = b - 1 - s, a + s
            out.append((tuple(base), -1))
    return tuple(out)


def divided_difference(i: int, j: int, f: VPoly) -> VPoly:
    """(f(x) - f(x(i,j)))/(x_i - x_j) applied to the polynomial part only."""
    if i == j:
        raise ValueError("divided difference needs i != j")
    acc: dict = {}
    for alpha, coords in f.terms.items():
        for beta, sign in scalar_divided_difference(alpha, i, j):
            _add_vec(acc, beta, coords, sign if sign != 1 else None)
    out = VPoly(f.ctx)
    out.terms = acc
    return out


def mult_x(i: int, f: VPoly) -> VPoly:
    out = VPoly(f.ctx)
    k = i - 1
    out.terms = {a[:k] + (a[k] + 1,) + a[k + 1:]: dict(c) for a, c in f.terms.items()}
    return out


def permute_exponent(w: Sequence[int], alpha: Exp) -> Exp:
    """(w alpha)_i = alpha_{w^{-1}(i)}."""
    out = [0] * len(alpha)
    for j, wj in enumerate(w):
        out[wj - 1] = alpha[j]
    return tuple(out)


def group_act(w: Sequence[int], f: VPoly) -> VPoly:
    """w(x^alpha u) = x^{w alpha} (w u)."""
    ctx = f.ctx
    w = tuple(w)
    acc: dict = {}
    for alpha, coords in f.terms.items():
        _add_vec(acc, permute_exponent(w, alpha), ctx.apply_perm(w, coords))
    out = VPoly(ctx)
    out.terms = acc
    return out


def _transpose_coords(ctx: IrrepContext, i: int, j: int, coords: Mapping[int, ScalarQk]) -> dict:
    return ctx.apply_perm(transposition(ctx.N, i, j), coords)


def dunkl(i: int, f: VPoly) -> VPoly:
    ctx = f.ctx
    n = ctx.N
    if not 1 <= i <= n:
        raise IndexError(f"Dunkl index {i} out of range")
    deriv: dict = {}
    reflect: dict = {}
    k = i - 1
    for alpha, coords in f.terms.items():
        a = alpha[k]
        if a:
            _add_vec(deriv, alpha[:k] + (a - 1,) + alpha[k + 1:], coords, a if a != 1 else None)
        moved = None
        for j in range(1, n + 1):
            if j == i or alpha[j - 1] == a:
                continue
            moved = _transpose_coords(ctx, i, j, coords)
            for beta, sign in scalar_divided_difference(alpha, i, j):
                _add_vec(reflect, beta, moved, -1 if sign < 0 else None)
    for beta, coords in reflect.items():
        _add_vec(deriv, beta, coords, KAPPA)
    out = VPoly(ctx)
    out.terms = deriv
    return out


def cherednik_u(i: int, f: VPoly) -> VPoly:
    ctx = f.ctx
    out = dunkl(i, mult_x(i, f))
    if i > 1:
        acc: dict = {}
        for j in range(1, i):
            w = transposition(ctx.N, i, j)
            for alpha, coords in f.terms.items():
                _add_vec(acc, permute_exponent(w, alpha), ctx.apply_perm(w, coords))
        for beta, coords in acc.items():
            _add_vec(out.terms, beta, coords, -KAPPA)
    return out


# -- contravariant form ------------------------------------------------------

def _strip(alpha: Exp) -> tuple[Exp, int]:
    """Split D^alpha = D_i D^{alpha - e_i} with i the last index carrying a positive exponent."""
    for k in range(len(alpha) - 1, -1, -1):
        if alpha[k]:
            return alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:], k + 1
    raise ValueError("zero exponent has no factor")


def _dunkl_powers(g: VPoly, alphas: Iterable[Exp]) -> dict[Exp, VPoly]:
    memo: dict[Exp, VPoly] = {}
    zero_exp = tuple([0] * g.N)
    memo[zero_exp] = g

    def get(alpha: Exp) -> VPoly:
        res = memo.get(alpha)
        if res is None:
            prev, i = _strip(alpha)
            res = dunkl(i, get(prev))
            memo[alpha] = res
        return res

    for a in sorted(alphas, key=monomial_key):
        get(a)
    return memo


def contravariant_form(f: VPoly, g: VPoly, restrict: bool = True) -> ScalarQk:
    """<f, g> = sum over alpha of <u_alpha, (D^alpha g)(0)>_0, with f = sum x^alpha u_alpha.

    With ``restrict=False`` every term of ``g`` is fed through the Dunkl
    powers (no degree pre-filtering); useful to test degree orthogonality.
    """
    f._check(g)
    ctx = f.ctx
    total = ZERO
    for d in sorted({sum(a) for a in f.terms}):
        gd = g.homogeneous_part(d) if restrict else g
        if gd.is_zero():
            continue
        fd = [a for a in f.terms if sum(a) == d]
        powers = _dunkl_powers(gd, fd)
        zero_exp = tuple([0] * ctx.N)
        for alpha in fd:
            const = powers[alpha].terms.get(zero_exp)
            if const:
                total = total + ctx.form(f.terms[alpha], const)
    return total


def basis_elements(tau, d: int) -> list[tuple[Exp, int]]:
    """Monomial basis x^alpha v_T of the degree-d part, ordered by monomial_key then tableau index."""
    ctx = irrep(tau)
    alphas = sorted(compositions(ctx.N, d), key=monomial_key)
    return [(a, t) for a in alphas for t in range(ctx.dim)]


@lru_cache(maxsize=64)
def _gram(tau: tuple[int, ...], d: int) -> tuple[tuple[tuple[Exp, int], ...], tuple[tuple[ScalarQk, ...], ...]]:
    ctx = irrep(tau)
    basis = basis_elements(tau, d)
    alphas = sorted({a for a, _ in basis}, key=monomial_key)
    zero_exp = tuple([0] * ctx.N)
    pos = {b: k for k, b in enumerate(basis)}
    n = len(basis)
    rows = [[ZERO] * n for _ in range(n)]
    for col, (beta, t) in enumerate(basis):
        g = VPoly(ctx, {beta: {t: ONE}})
        powers = _dunkl_powers(g, alphas)
        for alpha in alphas:
            const = powers[alpha].terms.get(zero_exp)
            if not const:
                continue
            for s, c in const.items():
                rows[pos[(alpha, s)]][col] = c * ctx.norms_qk[s]
    return tuple(basis), tuple(tuple(r) for r in rows)


def gram_matrix(tau, d: int):
    """(basis, G) with G[r][c] = <basis[r], basis[c]> on the degree-d monomial basis of M(tau)."""
    return _gram(validate_partition(tau), d)


def form_via_gram(f: VPoly, g: VPoly) -> ScalarQk:
    """The contravariant form evaluated through the cached Gram matrices (same values, reusable across pairs)."""
    f._check(g)
    total = ZERO
    for d in sorted({sum(a) for a in f.terms} & {sum(a) for a in g.terms}):
        basis, G = gram_matrix(f.tau, d)
        pos = {b: k for k, b in enumerate(basis)}
        fv = [(pos[(a, t)], c) for a, coords in f.terms.items() if sum(a) == d for t, c in coords.items()]
        gv = [(pos[(a, t)], c) for a, coords in g.terms.items() if sum(a) == d for t, c in coords.items()]
        for r, a in fv:
            row = G[r]
            acc = ZERO
            for c_, b in gv:
                e = row[c_]
                if not e.is_zero():
                    acc = acc + e * b
            if not acc.is_zero():
                total = total + a * acc
    return total


def specialize(f: VPoly, k0) -> dict[Exp, dict[int, Fraction]]:
    """Coefficients of f at k = k0 (raises PoleAtKappa on a pole)."""
    return {a: {t: qk_eval(c, k0) for t, c in coords.items()} for a, coords in f.terms.items()}

