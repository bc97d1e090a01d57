"""Partitions, compositions, Ferrers-diagram statistics and reversed standard Young tableaux.

Conventions used throughout the package:

* partitions and compositions are plain tuples of ints; a composition always
  carries its full length N (trailing zeros included);
* permutations are 1-based one-line tuples ``w`` with ``w[i-1] = w(i)``;
* a reversed standard Young tableau (RSYT) of shape tau is a filling by
  1..N that strictly decreases along rows and down columns.  Its identifier
  is the row-reading word, e.g. ``"3,2,1"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Iterator, Sequence

__all__ = [
    "IncomparableInput",
    "InvalidPartition",
    "Node",
    "RSYT",
    "StabilizerIntervals",
    "column_strict",
    "compositions",
    "conjugate",
    "dominance_lt",
    "dominates",
    "enumerate_rsyt",
    "floor_tableau",
    "hook_data",
    "hook_grid",
    "inv_count",
    "min_antisymmetric_label",
    "min_symmetric_label",
    "parse_int_list",
    "partitions",
    "perm_inverse",
    "perm_mul",
    "phi",
    "phi_inverse",
    "rank",
    "rank_vector",
    "rearrangements",
    "row_strict",
    "sorting_permutation",
    "stabilizer",
    "transposition",
    "validate_partition",
]


class InvalidPartition(ValueError):
    """Input is not a weakly decreasing tuple of positive integers."""


class IncomparableInput(ValueError):
    """Dominance comparison between compositions of different length or degree."""


# -- partitions ----------------------------------------------------------

def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse ``"5,3,2"`` (spaces allowed) into a tuple of ints."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")


def validate_partition(tau: Sequence[int] | str) -> tuple[int, ...]:
    if isinstance(tau, str):
        tau = parse_int_list(tau)
    tau = tuple(int(t) for t in tau)
    # trailing zeros are harmless for a shape
    while tau and tau[-1] == 0:
        tau = tau[:-1]
    if not tau:
        raise InvalidPartition("empty partition")
    if any(t <= 0 for t in tau) or any(tau[i] < tau[i + 1] for i in range(len(tau) - 1)):
        raise InvalidPartition(f"{tau} is not a partition")
    return tau


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(tau: Sequence[int]) -> tuple[int, ...]:
    tau = tuple(t for t in tau if t > 0)
    if not tau:
        return ()
    return tuple(sum(1 for t in tau if t > j) for j in range(tau[0]))


@dataclass(frozen=True)
class Node:
    row: int
    col: int
    arm: int
    leg: int
    hook: int


def hook_data(tau: Sequence[int]) -> list[Node]:
    """Arm, leg and hook of every cell, row-major (1-based coordinates)."""
    tau = validate_partition(tau)
    tc = conjugate(tau)
    out = []
    for i, row_len in enumerate(tau, start=1):
        for j in range(1, row_len + 1):
            arm = row_len - j
            leg = tc[j - 1] - i
            out.append(Node(i, j, arm, leg, arm + leg + 1))
    return out


def hook_grid(tau: Sequence[int]) -> list[list[int]]:
    tau = validate_partition(tau)
    grid: list[list[int]] = [[] for _ in tau]
    for node in hook_data(tau):
        grid[node.row - 1].append(node.hook)
    return grid


# -- tableaux ------------------------------------------------------------

class RSYT:
    """A reversed standard Young tableau.

    ``rows`` is a tuple of row tuples.  ``row_of[i]``/``col_of[i]`` give the
    1-based position of entry i (index 0 is unused), and ``content[i]`` is
    ``col - row``.
    """

    __slots__ = ("rows", "shape", "N", "row_of", "col_of", "content", "id", "_hash")

    def __init__(self, rows: Sequence[Sequence[int]], check: bool = True):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        self.shape = tuple(len(r) for r in self.rows)
        self.N = sum(self.shape)
        row_of = [0] * (self.N + 1)
        col_of = [0] * (self.N + 1)
        for i, r in enumerate(self.rows, start=1):
            for j, x in enumerate(r, start=1):
                if check and (not 1 <= x <= self.N or row_of[x]):
                    raise ValueError(f"{rows} is not a filling by 1..{self.N}")
                row_of[x] = i
                col_of[x] = j
        self.row_of = tuple(row_of)
        self.col_of = tuple(col_of)
        self.content = tuple(c - r for r, c in zip(row_of, col_of))
        self.id = ",".join(str(x) for r in self.rows for x in r)
        self._hash = hash(self.rows)
        if check:
            validate_partition(self.shape)
            for r in self.rows:
                if any(r[j] <= r[j + 1] for j in range(len(r) - 1)):
                    raise ValueError(f"row {r} is not strictly decreasing")
            for i in range(len(self.rows) - 1):
                for j in range(len(self.rows[i + 1])):
                    if self.rows[i][j] <= self.rows[i + 1][j]:
                        raise ValueError(f"column {j + 1} is not strictly decreasing")

    @classmethod
    def from_id(cls, tau: Sequence[int], ident: str) -> "RSYT":
        """Rebuild from the row-reading word for a given shape."""
        word = parse_int_list(ident)
        tau = validate_partition(tau)
        if len(word) != sum(tau):
            raise ValueError(f"tableau id {ident!r} does not fit shape {tau}")
        rows, pos = [], 0
        for t in tau:
            rows.append(word[pos:pos + t])
            pos += t
        return cls(rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def c(self, i: int) -> int:
        return self.content[i]

    def rw(self, i: int) -> int:
        return self.row_of[i]

    def cm(self, i: int) -> int:
        return self.col_of[i]

    def contents(self) -> tuple[int, ...]:
        """Content vector (c(1,T), ..., c(N,T))."""
        return self.content[1:]

    def swap(self, i: int) -> "RSYT | None":
        """The tableau s_i T with i and i+1 interchanged, or None when that is not an RSYT."""
        if self.row_of[i] == self.row_of[i + 1] or self.col_of[i] == self.col_of[i + 1]:
            return None
        rows = [list(r) for r in self.rows]
        ri, ci = self.row_of[i] - 1, self.col_of[i] - 1
        rj, cj = self.row_of[i + 1] - 1, self.col_of[i + 1] - 1
        rows[ri][ci], rows[rj][cj] = i + 1, i
        return RSYT(rows, check=False)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, RSYT) and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "RSYT") -> bool:
        return self.reading_word() < other.reading_word()

    def __repr__(self) -> str:
        return "RSYT[" + "|".join(",".join(map(str, r)) for r in self.rows) + "]"


@lru_cache(maxsize=None)
def _enumerate(tau: tuple[int, ...]) -> tuple[RSYT, ...]:
    n = sum(tau)
    results: list[RSYT] = []
    filled = [0] * len(tau)
    grid = [[0] * t for t in tau]

    def place(value: int) -> None:
        if value == 0:
            results.append(RSYT(grid, check=False))
            return
        for r in range(len(tau)):
            c = filled[r]
            if c < tau[r] and (r == 0 or filled[r - 1] > c):
                grid[r][c] = value
                filled[r] += 1
                place(value - 1)
                filled[r] -= 1

    place(n)
    results.sort(key=RSYT.reading_word)
    return tuple(results)


def enumerate_rsyt(tau: Sequence[int] | str) -> list[RSYT]:
    """All RSYT of shape tau, sorted by row-reading word."""
    return list(_enumerate(validate_partition(tau)))


# -- compositions, rank and order ----------------------------------------

def compositions(n_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All compositions of the given degree with n_vars entries (reverse lex order)."""
    if n_vars == 0:
        return [()] if degree == 0 else []
    if n_vars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in compositions(n_vars - 1, degree - first):
            out.append((first,) + rest)
    return out


def rearrangements(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct compositions alpha with alpha^+ equal to sorted(lam, reverse=True)."""
    lam = tuple(sorted(lam, reverse=True))
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: dict[int, int]) -> None:
        if len(prefix) == len(lam):
            out.append(tuple(prefix))
            return
        for v in sorted(remaining, reverse=True):
            if remaining[v]:
                remaining[v] -= 1
                prefix.append(v)
                rec(prefix, remaining)
                prefix.pop()
                remaining[v] += 1

    counts: dict[int, int] = {}
    for v in lam:
        counts[v] = counts.get(v, 0) + 1
    rec([], counts)
    return out


def rank(alpha: Sequence[int], i: int) -> int:
    """r(alpha, i) = #{j: alpha_j > alpha_i} + #{j <= i: alpha_j = alpha_i} (1-based)."""
    a = alpha[i - 1]
    return sum(1 for x in alpha if x > a) + sum(1 for x in alpha[:i] if x == a)


def rank_vector(alpha: Sequence[int]) -> tuple[int, ...]:
    """(r(alpha,1), ..., r(alpha,N)) computed by a stable descending sort."""
    order = sorted(range(len(alpha)), key=lambda j: (-alpha[j], j))
    r = [0] * len(alpha)
    for pos, j in enumerate(order, start=1):
        r[j] = pos
    return tuple(r)


def sorting_permutation(alpha: Sequence[int]) -> tuple[int, ...]:
    """w_alpha, the inverse of i -> r(alpha, i)."""
    return perm_inverse(rank_vector(alpha))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Weak majorization: every partial sum of a is >= the matching partial sum of b."""
    return all(x >= y for x, y in zip(accumulate(a), accumulate(b)))


def dominance_lt(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """alpha strictly below beta: alpha^+ strictly dominated by beta^+, or equal sorts and alpha below beta."""
    if len(alpha) != len(beta) or sum(alpha) != sum(beta):
        raise IncomparableInput(f"cannot compare {tuple(alpha)} and {tuple(beta)}")
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha == beta:
        return False
    ap = tuple(sorted(alpha, reverse=True))
    bp = tuple(sorted(beta, reverse=True))
    if ap != bp:
        return dominates(bp, ap)
    return dominates(beta, alpha)


def phi(alpha: Sequence[int]) -> tuple[int, ...]:
    """(alpha_2, ..., alpha_N, alpha_1 + 1)."""
    return tuple(alpha[1:]) + (alpha[0] + 1,)


def phi_inverse(alpha: Sequence[int]) -> tuple[int, ...]:
    if alpha[-1] < 1:
        raise ValueError(f"phi inverse needs a positive last entry, got {tuple(alpha)}")
    return (alpha[-1] - 1,) + tuple(alpha[:-1])


def inv_count(alpha: Sequence[int]) -> int:
    n = len(alpha)
    return sum(1 for i in range(n) for j in range(i + 1, n) if alpha[i] < alpha[j])


# -- permutations --------------------------------------------------------

def perm_inverse(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def perm_mul(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """The composite u o v (apply v first)."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = j, i
    return tuple(w)


# -- stabilizers and minimal labels --------------------------------------

@dataclass(frozen=True)
class StabilizerIntervals:
    """Maximal blocks [a, b] (a < b) on which a partition is constant."""

    intervals: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return prod(factorial(b - a + 1) for a, b in self.intervals)

    def generators(self) -> list[int]:
        """Indices i with s_i in the group."""
        return [i for a, b in self.intervals for i in range(a, b)]

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)


def stabilizer(lam: Sequence[int]) -> StabilizerIntervals:
    lam = tuple(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not weakly decreasing")
    out = []
    start = 1
    for i in range(2, len(lam) + 2):
        if i > len(lam) or lam[i - 1] != lam[start - 1]:
            if i - 1 > start:
                out.append((start, i - 1))
            start = i
    return StabilizerIntervals(tuple(out))


def min_symmetric_label(tau: Sequence[int]) -> tuple[tuple[int, ...], RSYT]:
    """(delta^s(tau), T^s): N..1 entered row by row; entries of row i get value i-1."""
    tau = validate_partition(tau)
    n = sum(tau)
    rows, value = [], n
    delta = [0] * n
    for i, t in enumerate(tau):
        rows.append(list(range(value, value - t, -1)))
        for x in rows[-1]:
            delta[x - 1] = i
        value -= t
    return tuple(delta), RSYT(rows)


def min_antisymmetric_label(tau: Sequence[int]) -> tuple[tuple[int, ...], RSYT]:
    """(delta^a(tau), T^a): N..1 entered column by column; entries of column j get value j-1."""
    tau = validate_partition(tau)
    n = sum(tau)
    tc = conjugate(tau)
    grid = [[0] * t for t in tau]
    delta = [0] * n
    value = n
    for j, height in enumerate(tc):
        for i in range(height):
            grid[i][j] = value
            delta[value - 1] = j
            value -= 1
    return tuple(delta), RSYT(grid)


def floor_tableau(lam: Sequence[int], T: RSYT) -> tuple[tuple[int, ...], ...]:
    """The filling of shape(T) that places lam_i at the cell holding i."""
    if len(lam) != T.N:
        raise ValueError("composition length does not match the tableau")
    return tuple(tuple(lam[x - 1] for x in r) for r in T.rows)


def column_strict(grid: Sequence[Sequence[int]]) -> bool:
    """Strictly increasing down columns, weakly increasing along rows."""
    for r in grid:
        if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
            return False
    for i in range(len(grid) - 1):
        for j in range(len(grid[i + 1])):
            if grid[i][j] >= grid[i + 1][j]:
                return False
    return True


def row_strict(grid: Sequence[Sequence[int]]) -> bool:
    """Strictly increasing along rows, weakly increasing down columns."""
    for r in grid:
        if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
            return False
    for i in range(len(grid) - 1):
        for j in range(len(grid[i + 1])):
            if grid[i][j] > grid[i + 1][j]:
                return False
    return True
