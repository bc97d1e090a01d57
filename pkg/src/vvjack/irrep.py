"""The irreducible S_N-module V_tau in the (non-normalised) seminormal basis.

Basis vectors ``v_T`` are indexed by reversed standard Young tableaux.  The
simple reflection s_i acts by Murphy's four-case rule, with
``b = 1/(c(i,T) - c(i+1,T))``:

1. i, i+1 in the same row     -> s_i v_T = v_T
2. i, i+1 in the same column  -> s_i v_T = -v_T
3. 0 < b <= 1/2               -> s_i v_T = b v_T + v_{s_i T}
4. -1/2 <= b < 0              -> s_i v_T = b v_T + (1 - b^2) v_{s_i T}

The invariant form is pinned by ``<v_T, v_T>_0 = norm0(T)``; distinct basis
vectors are orthogonal.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .combin import RSYT, StabilizerIntervals, enumerate_rsyt, transposition, validate_partition
from .exactnum import ONE, ZERO, ScalarQk, format_qk, parse_qk, qk

__all__ = [
    "ConditionViolated",
    "IrrepContext",
    "ModuleVector",
    "NotColumnDistinct",
    "NotRowDistinct",
    "act_perm",
    "act_simple",
    "antisymmetric_vector",
    "extremal_tableau",
    "group_norm",
    "invariant_vector",
    "irrep",
    "jm_apply",
    "norm0",
    "orbit",
    "p0_product",
    "p1_product",
]


class ConditionViolated(ValueError):
    """The entries of an interval are not in distinct columns (P0) / rows (P1)."""


class NotColumnDistinct(ConditionViolated):
    pass


class NotRowDistinct(ConditionViolated):
    pass


Coords = dict  # tableau index -> ScalarQk


def _add_into(acc: dict, key, value: ScalarQk) -> None:
    cur = acc.get(key)
    if cur is None:
        acc[key] = value
    else:
        s = cur + value
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


class IrrepContext:
    """Per-shape tables: tableaux, contents, the simple-reflection action and cached permutation matrices."""

    def __init__(self, tau: tuple[int, ...]):
        self.tau = tau
        self.N = sum(tau)
        self.tableaux: list[RSYT] = enumerate_rsyt(tau)
        self.dim = len(self.tableaux)
        self.index: dict[RSYT, int] = {T: k for k, T in enumerate(self.tableaux)}
        self.by_id: dict[str, int] = {T.id: k for k, T in enumerate(self.tableaux)}
        self.norms = [_norm0_fraction(T) for T in self.tableaux]
        self.norms_qk = [qk(x) for x in self.norms]
        # simple[i][t] = list of (target index, coefficient) giving s_i v_t
        self.simple: list[list[tuple[tuple[int, ScalarQk], ...]]] = [[] for _ in range(self.N)]
        for i in range(1, self.N):
            for T in self.tableaux:
                self.simple[i].append(self._simple_column(i, T))
        self._perm_cache: dict[tuple[int, ...], list[tuple[tuple[int, ScalarQk], ...]]] = {}

    def _simple_column(self, i: int, T: RSYT) -> tuple[tuple[int, ScalarQk], ...]:
        t = self.index[T]
        if T.row_of[i] == T.row_of[i + 1]:
            return ((t, ONE),)
        if T.col_of[i] == T.col_of[i + 1]:
            return ((t, qk(-1)),)
        b = Fraction(1, T.content[i] - T.content[i + 1])
        partner = self.index[T.swap(i)]
        off = Fraction(1) if b > 0 else 1 - b * b
        return ((t, qk(b)), (partner, qk(off)))

    def b_value(self, i: int, T: RSYT) -> Fraction:
        return Fraction(1, T.content[i] - T.content[i + 1])

    # -- raw (index-keyed) operations ---------------------------------
    def apply_simple(self, i: int, coords: Mapping[int, ScalarQk]) -> Coords:
        if not 1 <= i < self.N:
            raise IndexError(f"simple reflection s_{i} out of range for N={self.N}")
        table = self.simple[i]
        out: Coords = {}
        for t, a in coords.items():
            for target, c in table[t]:
                _add_into(out, target, a * c)
        return out

    def perm_columns(self, w: Sequence[int]) -> list[tuple[tuple[int, ScalarQk], ...]]:
        """Cached matrix of w: column t lists (index, coefficient) of w v_t."""
        w = tuple(w)
        cols = self._perm_cache.get(w)
        if cols is None:
            cols = []
            for t in range(self.dim):
                v = self.apply_perm_direct(w, {t: ONE})
                cols.append(tuple(sorted(v.items())))
            self._perm_cache[w] = cols
        return cols

    def apply_perm_direct(self, w: Sequence[int], coords: Mapping[int, ScalarQk]) -> Coords:
        """w v via bubble sort: while w has a descent i, v <- s_i v and w <- w s_i."""
        w = list(w)
        if len(w) != self.N:
            raise ValueError("permutation length does not match N")
        v = dict(coords)
        while True:
            for i in range(1, self.N):
                if w[i - 1] > w[i]:
                    break
            else:
                return v
            v = self.apply_simple(i, v)
            w[i - 1], w[i] = w[i], w[i - 1]

    def apply_perm(self, w: Sequence[int], coords: Mapping[int, ScalarQk]) -> Coords:
        cols = self.perm_columns(w)
        out: Coords = {}
        for t, a in coords.items():
            for target, c in cols[t]:
                _add_into(out, target, a * c)
        return out

    def form(self, u: Mapping[int, ScalarQk], v: Mapping[int, ScalarQk]) -> ScalarQk:
        total = ZERO
        for t, a in u.items():
            b = v.get(t)
            if b is not None:
                total = total + a * b * self.norms_qk[t]
        return total

    def vector(self, coords: Mapping[int, ScalarQk] | None = None) -> "ModuleVector":
        return ModuleVector(self, coords or {})

    def basis(self, T: RSYT | int | str) -> "ModuleVector":
        return ModuleVector(self, {self.lookup(T): ONE})

    def lookup(self, T: RSYT | int | str) -> int:
        if isinstance(T, int):
            return T
        if isinstance(T, str):
            try:
                return self.by_id[T]
            except KeyError:
                raise KeyError(f"no tableau with id {T!r} of shape {self.tau}") from None
        return self.index[T]


@lru_cache(maxsize=None)
def _irrep(tau: tuple[int, ...]) -> IrrepContext:
    return IrrepContext(tau)


def irrep(tau) -> IrrepContext:
    return _irrep(validate_partition(tau))


class ModuleVector:
    """An element of V_tau: sparse coordinates on the basis {v_T}."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: IrrepContext, coords: Mapping[int, ScalarQk]):
        self.ctx = ctx
        self.coords = {t: (c if isinstance(c, ScalarQk) else qk(c)) for t, c in coords.items()}
        self.coords = {t: c for t, c in self.coords.items() if not c.is_zero()}

    @property
    def tau(self) -> tuple[int, ...]:
        return self.ctx.tau

    def coefficient(self, T) -> ScalarQk:
        return self.coords.get(self.ctx.lookup(T), ZERO)

    def items(self) -> Iterable[tuple[RSYT, ScalarQk]]:
        for t in sorted(self.coords):
            yield self.ctx.tableaux[t], self.coords[t]

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.coords)
        for t, c in other.coords.items():
            _add_into(out, t, c)
        return ModuleVector(self.ctx, out)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.ctx, {t: -c for t, c in self.coords.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def scale(self, s) -> "ModuleVector":
        s = qk(s)
        return ModuleVector(self.ctx, {t: c * s for t, c in self.coords.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleVector) and self.ctx.tau == other.ctx.tau and self.coords == other.coords

    def __hash__(self):
        raise TypeError("ModuleVector is not hashable")

    def to_json(self) -> dict[str, str]:
        return {self.ctx.tableaux[t].id: format_qk(c) for t, c in sorted(self.coords.items())}

    @classmethod
    def from_json(cls, tau, data: Mapping[str, str]) -> "ModuleVector":
        ctx = irrep(tau)
        return cls(ctx, {ctx.lookup(k): parse_qk(v) for k, v in data.items()})

    def __repr__(self) -> str:
        body = " + ".join(f"({format_qk(c)})v[{T.id}]" for T, c in self.items())
        return body or "0"


# -- operations ------------------------------------------------------------

def act_simple(i: int, v: ModuleVector) -> ModuleVector:
    return ModuleVector(v.ctx, v.ctx.apply_simple(i, v.coords))


def act_perm(w: Sequence[int], v: ModuleVector) -> ModuleVector:
    return ModuleVector(v.ctx, v.ctx.apply_perm_direct(w, v.coords))


def jm_apply(i: int, v: ModuleVector) -> ModuleVector:
    """omega_i v = sum over j > i of (i, j) v, each transposition applied through act_perm."""
    ctx = v.ctx
    out = ctx.vector()
    for j in range(i + 1, ctx.N + 1):
        out = out + act_perm(transposition(ctx.N, i, j), v)
    return out


def _norm0_fraction(T: RSYT) -> Fraction:
    c = T.content
    out = Fraction(1)
    for i in range(1, T.N + 1):
        for j in range(i + 1, T.N + 1):
            d = c[i] - c[j]
            if d <= -2:
                out *= Fraction(d * d - 1, d * d)
    return out


def norm0(T: RSYT) -> ScalarQk:
    """<v_T, v_T>_0 from the content vector."""
    return qk(_norm0_fraction(T))


def _check_distinct(T: RSYT, a: int, b: int, attr: str, exc) -> None:
    seen = set()
    pos = T.col_of if attr == "col" else T.row_of
    for i in range(a, b + 1):
        if pos[i] in seen:
            kind = "columns" if attr == "col" else "rows"
            raise exc(f"entries {a}..{b} of {T!r} are not in distinct {kind}")
        seen.add(pos[i])


def _p_product(T: RSYT, a: int, b: int, sign: int) -> Fraction:
    c, cm = T.content, T.col_of
    out = Fraction(1)
    for i in range(a, b + 1):
        for j in range(i + 1, b + 1):
            if cm[i] < cm[j]:
                d = c[j] - c[i]
                out *= Fraction(d, 1 + sign * d)
    return out


def p0_product(T: RSYT, a: int, b: int) -> ScalarQk:
    """prod over a <= i < j <= b with cm(i) < cm(j) of (c_j - c_i)/(1 + c_j - c_i)."""
    _check_distinct(T, a, b, "col", ConditionViolated)
    return qk(_p_product(T, a, b, 1))


def p1_product(T: RSYT, a: int, b: int) -> ScalarQk:
    """prod over a <= i < j <= b with cm(i) < cm(j) of (c_j - c_i)/(1 - c_j + c_i); needs distinct rows."""
    _check_distinct(T, a, b, "row", ConditionViolated)
    return qk(_p_product(T, a, b, -1))


def orbit(T: RSYT, H: StabilizerIntervals) -> list[RSYT]:
    """Y(T; H): tableaux reachable from T by admissible swaps s_i, s_i in H (sorted by reading word)."""
    gens = H.generators()
    seen = {T}
    stack = [T]
    while stack:
        S = stack.pop()
        for i in gens:
            S2 = S.swap(i)
            if S2 is not None and S2 not in seen:
                seen.add(S2)
                stack.append(S2)
    return sorted(seen, key=RSYT.reading_word)


def extremal_tableau(T: RSYT, H: StabilizerIntervals, by: str = "cm") -> RSYT:
    """The unique member of Y(T; H) whose columns (by='cm') or rows (by='rw') weakly decrease across every interval."""
    members = []
    for S in orbit(T, H):
        pos = S.col_of if by == "cm" else S.row_of
        if all(pos[i] >= pos[i + 1] for a, b in H for i in range(a, b)):
            members.append(S)
    if len(members) != 1:
        raise ValueError(f"expected one extremal tableau in the orbit of {T!r}, found {len(members)}")
    return members[0]


def _interval_vector(T0: RSYT, H: StabilizerIntervals, sign: int) -> ModuleVector:
    ctx = irrep(T0.shape)
    attr, exc = ("col", NotColumnDistinct) if sign > 0 else ("row", NotRowDistinct)
    for a, b in H:
        _check_distinct(T0, a, b, attr, exc)
    coords = {}
    for S in orbit(T0, H):
        coef = Fraction(1)
        for a, b in H:
            coef *= _p_product(S, a, b, sign)
        coords[ctx.index[S]] = qk(coef)
    return ModuleVector(ctx, coords)


def invariant_vector(T0: RSYT, H: StabilizerIntervals) -> ModuleVector:
    """The H-invariant vector sum over Y(T0;H) of prod_j P0(T; a_j, b_j) v_T.

    Any member of the orbit may be passed; the coefficient of the extremal
    tableau (columns decreasing across each interval) is 1.
    """
    return _interval_vector(T0, H, 1)


def antisymmetric_vector(T0: RSYT, H: StabilizerIntervals) -> ModuleVector:
    """The H-alternating vector sum over Y(T0;H) of prod_j P1(T; a_j, b_j) v_T."""
    return _interval_vector(T0, H, -1)


def _stabilizer_count(T0: RSYT, a: int, b: int, signed: bool) -> int:
    ctx = irrep(T0.shape)
    t0 = ctx.index[T0]
    n = ctx.N
    count = 0
    for perm in itertools.permutations(range(a, b + 1)):
        w = list(range(1, n + 1))
        w[a - 1:b] = perm
        image = ctx.apply_perm_direct(w, {t0: ONE})
        if len(image) == 1 and t0 in image:
            c = image[t0]
            if c == 1 or (signed and c == -1):
                count += 1
    return count


def group_norm(kind: str, T0: RSYT, H: StabilizerIntervals, T1: RSYT | None = None) -> ScalarQk:
    """Closed-form <f, f>_0 for the invariant (kind='P0') or alternating (kind='P1') vector.

    The value is prod_j (#S_[a_j,b_j] / n0_j) |P(T1; a_j, b_j)| times norm0(T0),
    where T0/T1 are the column-/row-extremal members of the orbit and n0_j counts
    the elements of S_[a_j,b_j] fixing v_{T0} (up to sign for P1).
    """
    if kind not in ("P0", "P1"):
        raise ValueError("kind must be 'P0' or 'P1'")
    sign = 1 if kind == "P0" else -1
    attr, exc = ("col", NotColumnDistinct) if sign > 0 else ("row", NotRowDistinct)
    for a, b in H:
        _check_distinct(T0, a, b, attr, exc)
    T0 = extremal_tableau(T0, H, "cm")
    if T1 is None:
        T1 = extremal_tableau(T0, H, "rw")
    value = _norm0_fraction(T0)
    for a, b in H:
        n0 = _stabilizer_count(T0, a, b, signed=(sign < 0))
        value *= Fraction(factorial(b - a + 1), n0) * abs(_p_product(T1, a, b, sign))
    return qk(value)

