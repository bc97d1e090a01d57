"""Exact arithmetic in Q and in the rational-function field Q(k).

Polynomials in the formal parameter k are ``flint.fmpq_poly`` values; the
field element :class:`ScalarQk` keeps them as a gcd-reduced fraction with a
monic denominator, so two values are equal exactly when their stored
numerator/denominator pairs are equal.

Text form (used by the JSON interchange and the CLI)::

    (2*k^2+3*k+1)/(k+1)     -1/2     k^2-3

Coefficients are cleared to integers before printing; :func:`parse_qk`
accepts that grammar (and any arithmetic expression in ``k`` built from
integers, ``+ - * / ^`` and parentheses).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Union

import flint

KPoly = flint.fmpq_poly
BigQ = Fraction

__all__ = [
    "BigQ",
    "DivisionByZero",
    "KAPPA",
    "KPoly",
    "ONE",
    "PoleAtKappa",
    "ScalarQk",
    "ZERO",
    "format_qk",
    "parse_qk",
    "pochhammer",
    "qk",
    "qk_arith",
    "qk_eval",
    "qk_normalize",
]


class DivisionByZero(ZeroDivisionError):
    """Division by the zero element of Q(k)."""


class PoleAtKappa(ArithmeticError):
    """The denominator of a rational function vanishes at the requested k0."""

    def __init__(self, value: "ScalarQk", k0: Fraction):
        super().__init__(f"k0={k0} is a pole of {value}")
        self.value = value
        self.k0 = k0


_P_ONE = KPoly([1])
_P_ZERO = KPoly([])
_P_KAPPA = KPoly([0, 1])

Coercible = Union["ScalarQk", int, Fraction]


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _frac(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


class ScalarQk:
    """An element of Q(k), stored as ``num/den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, ScalarQk):
            if den == 1:
                self.num, self.den = num.num, num.den
                return
            num, den = (num / ScalarQk(den)).num, _P_ONE
        n = num if isinstance(num, KPoly) else KPoly([_to_fmpq(num)] if not isinstance(num, (list, tuple)) else [_to_fmpq(c) for c in num])
        d = den if isinstance(den, KPoly) else KPoly([_to_fmpq(den)] if not isinstance(den, (list, tuple)) else [_to_fmpq(c) for c in den])
        self.num, self.den = _reduce(n, d)

    @classmethod
    def _raw(cls, num: KPoly, den: KPoly) -> "ScalarQk":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_constant(self) -> bool:
        """True when the value does not depend on k."""
        return self.den.is_one() and self.num.degree() <= 0

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on k")
        return _frac(self.num(0)) if not self.num.is_zero() else Fraction(0)

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: Coercible) -> "ScalarQk":
        if not isinstance(other, ScalarQk):
            if isinstance(other, (int, Fraction)):
                other = qk(other)
            else:
                return NotImplemented
        a, b = self, other
        if a.num.is_zero():
            return b
        if b.num.is_zero():
            return a
        if a.den.is_one() and b.den.is_one():
            return ScalarQk._raw(a.num + b.num, _P_ONE)
        if a.den == b.den:
            n = a.num + b.num
            if n.is_zero():
                return ZERO
            g = n.gcd(a.den)
            if g.is_one():
                return ScalarQk._raw(n, a.den)
            return ScalarQk._raw(n // g, a.den // g)
        g = a.den.gcd(b.den)
        if g.is_one():
            n = a.num * b.den + b.num * a.den
            if n.is_zero():
                return ZERO
            return ScalarQk._raw(n, a.den * b.den)
        bd = b.den // g
        n = a.num * bd + b.num * (a.den // g)
        if n.is_zero():
            return ZERO
        d = a.den * bd
        h = n.gcd(d)
        if h.is_one():
            return ScalarQk._raw(n, d)
        return ScalarQk._raw(n // h, d // h)

    __radd__ = __add__

    def __neg__(self) -> "ScalarQk":
        return ScalarQk._raw(-self.num, self.den)

    def __pos__(self) -> "ScalarQk":
        return self

    def __sub__(self, other: Coercible) -> "ScalarQk":
        if not isinstance(other, ScalarQk):
            if isinstance(other, (int, Fraction)):
                other = qk(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "ScalarQk":
        return qk(other) - self

    def __mul__(self, other: Coercible) -> "ScalarQk":
        if not isinstance(other, ScalarQk):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return ZERO
                return ScalarQk._raw(self.num * _to_fmpq(other), self.den)
            return NotImplemented
        a, b = self, other
        if a.num.is_zero() or b.num.is_zero():
            return ZERO
        if b.den.is_one() and b.num.degree() == 0:
            return ScalarQk._raw(a.num * b.num, a.den)
        if a.den.is_one() and a.num.degree() == 0:
            return ScalarQk._raw(b.num * a.num, b.den)
        if a.den.is_one() and b.den.is_one():
            return ScalarQk._raw(a.num * b.num, _P_ONE)
        g1 = a.num.gcd(b.den)
        g2 = b.num.gcd(a.den)
        n1, d2 = (a.num, b.den) if g1.is_one() else (a.num // g1, b.den // g1)
        n2, d1 = (b.num, a.den) if g2.is_one() else (b.num // g2, a.den // g2)
        return ScalarQk._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarQk":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in Q(k)")
        lc = self.num.leading_coefficient()
        return ScalarQk._raw(self.den / lc, self.num / lc)

    def __truediv__(self, other: Coercible) -> "ScalarQk":
        if not isinstance(other, ScalarQk):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    raise DivisionByZero("division by zero in Q(k)")
                return ScalarQk._raw(self.num / _to_fmpq(other), self.den)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Coercible) -> "ScalarQk":
        return qk(other) * self.inverse()

    def __pow__(self, e: int) -> "ScalarQk":
        if e < 0:
            return self.inverse() ** (-e)
        if self.den.is_one():
            return ScalarQk._raw(self.num ** e, _P_ONE)
        return ScalarQk._raw(self.num ** e, self.den ** e)

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, ScalarQk):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def key(self) -> tuple:
        return (tuple(self.num.coeffs()), tuple(self.den.coeffs()))

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self.key())

    def __reduce__(self):
        return (parse_qk, (format_qk(self),))

    def __repr__(self) -> str:
        return f"ScalarQk({format_qk(self)!r})"

    def __str__(self) -> str:
        return format_qk(self)

    # -- evaluation ---------------------------------------------------
    def __call__(self, k0) -> Fraction:
        return qk_eval(self, k0)

    def degree_pair(self) -> tuple[int, int]:
        return self.num.degree(), self.den.degree()


def _reduce(num: KPoly, den: KPoly) -> tuple[KPoly, KPoly]:
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return _P_ZERO, _P_ONE
    g = num.gcd(den)
    if not g.is_one():
        num, den = num // g, den // g
    lc = den.leading_coefficient()
    if lc != 1:
        num, den = num / lc, den / lc
    return num, den


ZERO = ScalarQk._raw(_P_ZERO, _P_ONE)
ONE = ScalarQk._raw(_P_ONE, _P_ONE)
KAPPA = ScalarQk._raw(_P_KAPPA, _P_ONE)


def qk(value: Coercible) -> ScalarQk:
    """Coerce an int, Fraction or ScalarQk into Q(k)."""
    if isinstance(value, ScalarQk):
        return value
    if isinstance(value, int):
        if value == 0:
            return ZERO
        if value == 1:
            return ONE
        return ScalarQk._raw(KPoly([value]), _P_ONE)
    if isinstance(value, (Fraction, flint.fmpq)):
        if value == 0:
            return ZERO
        return ScalarQk._raw(KPoly([_to_fmpq(value)]), _P_ONE)
    if isinstance(value, str):
        return parse_qk(value)
    raise TypeError(f"cannot coerce {type(value).__name__} into Q(k)")


def qk_normalize(num, den) -> ScalarQk:
    """Canonical form of ``num/den``; ``num`` and ``den`` are KPoly or coefficient lists (low degree first)."""
    return ScalarQk(num, den)


def qk_arith(a: ScalarQk, b: ScalarQk, op: str) -> ScalarQk:
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def pochhammer(base: Coercible, n: int) -> ScalarQk:
    """Rising factorial (base)_n = base (base+1) ... (base+n-1); (base)_0 = 1."""
    if n < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    base = qk(base)
    out = ONE
    for i in range(n):
        out = out * (base + i)
    return out


def qk_eval(s: ScalarQk, k0) -> Fraction:
    """Specialise k to the rational k0; raises PoleAtKappa when den(k0) = 0."""
    q = _to_fmpq(k0)
    d = s.den(q)
    if d == 0:
        raise PoleAtKappa(s, Fraction(k0))
    return _frac(s.num(q) / d)


# -- text form -----------------------------------------------------------

def _int_coeffs(p: KPoly, scale: int) -> list[int]:
    out = []
    for c in p.coeffs():
        v = c * scale
        out.append(int(v.p) // int(v.q))
    return out


def _poly_str(coeffs: list[int]) -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if deg == 0:
            body = str(a)
        else:
            mono = "k" if deg == 1 else f"k^{deg}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out


def format_qk(s: ScalarQk) -> str:
    """Render as ``p(k)/q(k)`` with integer coefficients and a positive leading denominator coefficient."""
    if s.num.is_zero():
        return "0"
    denoms = [int(c.q) for c in s.num.coeffs() + s.den.coeffs()]
    scale = reduce(lcm, denoms, 1)
    nc = _int_coeffs(s.num, scale)
    dc = _int_coeffs(s.den, scale)
    content = reduce(gcd, [abs(c) for c in nc + dc if c], 0)
    if content > 1:
        nc = [c // content for c in nc]
        dc = [c // content for c in dc]
    num_txt = _poly_str(nc)
    if len(dc) == 1 and dc[0] == 1:
        return num_txt
    den_txt = _poly_str(dc)
    if sum(1 for c in nc if c) > 1:
        num_txt = f"({num_txt})"
    if sum(1 for c in dc if c) > 1 or len(dc) > 1:
        den_txt = f"({den_txt})" if sum(1 for c in dc if c) > 1 else den_txt
    return f"{num_txt}/{den_txt}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(kappa|k|κ)|(\*\*|[-+*/^()]))")


def parse_qk(text: str) -> ScalarQk:
    """Parse the text form produced by :func:`format_qk` (or any arithmetic expression in k)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("k", None))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    parser = _Parser(tokens, text)
    value = parser.expr()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return value


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.i = 0
        self.text = text

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def _take(self, kind=None, value=None):
        tok = self._peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ValueError(f"unexpected token in {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> ScalarQk:
        value = self.term()
        while self._peek() in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> ScalarQk:
        value = self.unary()
        while self._peek() in (("op", "*"), ("op", "/")):
            op = self._take()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> ScalarQk:
        if self._peek() == ("op", "-"):
            self._take()
            return -self.unary()
        if self._peek() == ("op", "+"):
            self._take()
            return self.unary()
        return self.power()

    def power(self) -> ScalarQk:
        base = self.atom()
        if self._peek() == ("op", "^"):
            self._take()
            sign = 1
            if self._peek() == ("op", "-"):
                self._take()
                sign = -1
            exp = self._take("int")[1]
            return base ** (sign * exp)
        return base

    def atom(self) -> ScalarQk:
        kind, value = self._peek()
        if kind == "int":
            self._take()
            return qk(value)
        if kind == "k":
            self._take()
            return KAPPA
        if (kind, value) == ("op", "("):
            self._take()
            inner = self.expr()
            self._take("op", ")")
            return inner
        raise ValueError(f"unexpected token in {self.text!r}")
