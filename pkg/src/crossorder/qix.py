"""Exact arithmetic in K = Q(i)(x) for the two-ideal example.

S is Q(i)[x] localised away from everything but (x+i) and (x-i); the Galois
group of K over Q(x) is generated by complex conjugation of coefficients,
which swaps those two ideals.  Label 0 is (x+i)S, vanishing at x = -i;
label 1 is (x-i)S, vanishing at x = +i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotAUnit, NotNormalized, NotSValued, CocycleIdentityViolated, ParseError, ShapeMismatch, ZeroElement
from .groups import GaloisSetup, example_setup
from .valuation import ValCocycle, validate_cocycle


@dataclass(frozen=True)
class GaussRat:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re=0, im=0) -> GaussRat:
        return cls(Fraction(re), Fraction(im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, o: GaussRat) -> GaussRat:
        return GaussRat(self.re + o.re, self.im + o.im)

    def __sub__(self, o: GaussRat) -> GaussRat:
        return GaussRat(self.re - o.re, self.im - o.im)

    def __neg__(self) -> GaussRat:
        return GaussRat(-self.re, -self.im)

    def __mul__(self, o: GaussRat) -> GaussRat:
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __truediv__(self, o: GaussRat) -> GaussRat:
        norm = o.re * o.re + o.im * o.im
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussRat(o.re / norm, -o.im / norm)

    def conj(self) -> GaussRat:
        return GaussRat(self.re, -self.im)


ZERO = GaussRat()
ONE = GaussRat.of(1)
I = GaussRat.of(0, 1)


@dataclass(frozen=True)
class QiPoly:
    """Polynomial over Q(i); ``coeffs[d]`` is the coefficient of x^d, no trailing zeros."""

    coeffs: tuple[GaussRat, ...] = ()

    @classmethod
    def make(cls, coeffs: Sequence[GaussRat]) -> QiPoly:
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def const(cls, c: GaussRat) -> QiPoly:
        return cls.make([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lead(self) -> GaussRat:
        return self.coeffs[-1]

    def __add__(self, o: QiPoly) -> QiPoly:
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QiPoly.make([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> QiPoly:
        return QiPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, o: QiPoly) -> QiPoly:
        return self + (-o)

    def __mul__(self, o: QiPoly) -> QiPoly:
        if not self or not o:
            return QiPoly()
        out = [ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return QiPoly.make(out)

    def scale(self, c: GaussRat) -> QiPoly:
        return QiPoly.make([c * x for x in self.coeffs])

    def __divmod__(self, o: QiPoly) -> tuple[QiPoly, QiPoly]:
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.lead()
        quo = [ZERO] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] / lead
            quo[k] = q
            if q:
                for j, c in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - q * c
        return QiPoly.make(quo), QiPoly.make(rem[:dq] if dq > 0 else [])

    def monic(self) -> QiPoly:
        return self.scale(ONE / self.lead()) if self else self

    def conj(self) -> QiPoly:
        return QiPoly(tuple(c.conj() for c in self.coeffs))

    def __call__(self, at: GaussRat) -> GaussRat:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc


def poly_gcd(a: QiPoly, b: QiPoly) -> QiPoly:
    while b:
        a, b = b, divmod(a, b)[1]
    return a.monic()


X = QiPoly.make([ZERO, ONE])
P_ONE = QiPoly.const(ONE)
# generators of the two maximal ideals, indexed by label
IDEAL_GENERATORS = (QiPoly.make([I, ONE]), QiPoly.make([-I, ONE]))


@dataclass(frozen=True)
class QiRatFunc:
    """Element of Q(i)(x) in lowest terms with a monic denominator."""

    num: QiPoly
    den: QiPoly = P_ONE

    @classmethod
    def make(cls, num: QiPoly, den: QiPoly = P_ONE) -> QiRatFunc:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(QiPoly(), P_ONE)
        g = poly_gcd(num, den)
        num = divmod(num, g)[0]
        den = divmod(den, g)[0]
        lead = den.lead()
        return cls(num.scale(ONE / lead), den.monic())

    @classmethod
    def of(cls, c) -> QiRatFunc:
        if isinstance(c, QiPoly):
            return cls.make(c)
        if not isinstance(c, GaussRat):
            c = GaussRat.of(c)
        return cls.make(QiPoly.const(c))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, o: QiRatFunc) -> QiRatFunc:
        return QiRatFunc.make(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: QiRatFunc) -> QiRatFunc:
        return QiRatFunc.make(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o: QiRatFunc) -> QiRatFunc:
        return QiRatFunc.make(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: QiRatFunc) -> QiRatFunc:
        if not o:
            raise ZeroDivisionError("division by zero in Q(i)(x)")
        return QiRatFunc.make(self.num * o.den, self.den * o.num)

    def __pow__(self, k: int) -> QiRatFunc:
        out = QiRatFunc.of(1)
        base = self if k >= 0 else QiRatFunc.of(1) / self
        for _ in range(abs(k)):
            out = out * base
        return out

    def conj(self) -> QiRatFunc:
        return QiRatFunc.make(self.num.conj(), self.den.conj())

    def __str__(self) -> str:
        return format_element(self)


def add(a: QiRatFunc, b: QiRatFunc) -> QiRatFunc:
    return a + b


def mul(a: QiRatFunc, b: QiRatFunc) -> QiRatFunc:
    return a * b


def div(a: QiRatFunc, b: QiRatFunc) -> QiRatFunc:
    return a / b


def conj(a: QiRatFunc) -> QiRatFunc:
    return a.conj()


def _multiplicity(p: QiPoly, gen: QiPoly) -> int:
    k = 0
    while p:
        q, rem = divmod(p, gen)
        if rem:
            break
        p = q
        k += 1
    return k


def val_at(a: QiRatFunc, M: int) -> int:
    """Order of vanishing of ``a`` at the ideal with label M."""
    if not a:
        raise ZeroElement("valuation of zero")
    gen = IDEAL_GENERATORS[M]
    return _multiplicity(a.num, gen) - _multiplicity(a.den, gen)


# --- string grammar ---------------------------------------------------------

_WS = re.compile(r"\s+")


class _Parser:
    def __init__(self, text: str):
        self.s = _WS.sub("", text)
        self.i = 0

    def peek(self, k: int = 0) -> str:
        j = self.i + k
        return self.s[j] if j < len(self.s) else ""

    def fail(self, what: str):
        raise ParseError(f"expected {what} at position {self.i} in {self.s!r}")

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def digits(self) -> int:
        j = self.i
        while self.peek().isdigit():
            self.i += 1
        if j == self.i:
            self.fail("digits")
        return int(self.s[j : self.i])

    def rat(self) -> Fraction:
        neg = self.eat("-")
        v = Fraction(self.digits())
        # greedy: "/" binds into the rational only when a digit follows
        if self.peek() == "/" and self.peek(1).isdigit():
            self.i += 1
            d = self.digits()
            if d == 0:
                raise ParseError("zero denominator in rational")
            v /= d
        return -v if neg else v

    def coeff(self) -> GaussRat:
        if self.eat("("):
            a = self.rat()
            if self.peek() not in "+-" or not self.peek():
                self.fail("'+' or '-'")
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
            b = self.rat() if self.peek() != "i" else Fraction(1)
            if not self.eat("i"):
                self.fail("'i'")
            if not self.eat(")"):
                self.fail("')'")
            return GaussRat(a, sign * b)
        if self.peek() == "i":
            self.i += 1
            return I
        v = self.rat()
        if self.eat("i"):
            return GaussRat(Fraction(0), v)
        return GaussRat(v)

    def mono(self) -> int:
        if not self.eat("x"):
            self.fail("'x'")
        if self.eat("^"):
            return self.digits()
        return 1

    def term(self) -> QiPoly:
        neg = False
        if self.peek() == "-" and self.peek(1) == "x":
            self.i += 1
            neg = True
        if self.peek() == "x":
            c, d = ONE, self.mono()
        else:
            c = self.coeff()
            d = self.mono() if self.eat("*") else 0
        if neg:
            c = -c
        return QiPoly.make([ZERO] * d + [c])

    def poly(self) -> QiPoly:
        acc = self.term()
        while self.peek() in ("+", "-") and self.peek():
            sign = self.s[self.i]
            self.i += 1
            t = self.term()
            acc = acc + t if sign == "+" else acc - t
        return acc

    def element(self) -> QiRatFunc:
        if not self.s:
            self.fail("an element")
        num = self.poly()
        den = P_ONE
        if self.eat("/"):
            den = self.poly()
        if self.i != len(self.s):
            self.fail("end of input")
        if not den:
            raise ParseError("zero denominator")
        return QiRatFunc.make(num, den)


def parse_element(text: str) -> QiRatFunc:
    return _Parser(text).element()


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_poly(p: QiPoly) -> str:
    """Descending powers, e.g. ``x^3+x`` or ``x+1i``; every output reparses."""
    if not p:
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
        if c.re and c.im:
            sign = "+" if c.im > 0 else "-"
            body, neg = f"({_fmt_rat(c.re)}{sign}{_fmt_rat(abs(c.im))}i)", False
        elif c.im:
            body, neg = f"{_fmt_rat(abs(c.im))}i", c.im < 0
        else:
            body, neg = _fmt_rat(abs(c.re)), c.re < 0
        if body == "1" and mono:
            text = mono
        else:
            text = body + ("*" + mono if mono else "")
        if not parts:
            if neg:
                text = "-" + (f"1*{mono}" if text == mono else text)
            parts.append(text)
        else:
            parts.append(("-" if neg else "+") + text)
    return "".join(parts)


def format_element(a: QiRatFunc) -> str:
    if a.den == P_ONE:
        return format_poly(a.num)
    return f"{format_poly(a.num)}/{format_poly(a.den)}"


# --- exact cocycles on the example setup -----------------------------------


def galois(g: int, a: QiRatFunc) -> QiRatFunc:
    return a if g == 0 else a.conj()


@dataclass(frozen=True)
class ExactCocycle:
    vals: tuple[tuple[QiRatFunc, QiRatFunc], tuple[QiRatFunc, QiRatFunc]]

    @property
    def setup(self) -> GaloisSetup:
        return example_setup()

    def __getitem__(self, key: tuple[int, int]) -> QiRatFunc:
        s, t = key
        return self.vals[s][t]

    def to_strings(self) -> list[list[str]]:
        return [[format_element(a) for a in row] for row in self.vals]


def validate_exact_cocycle(vals: Sequence[Sequence[QiRatFunc | str]]) -> ExactCocycle:
    if len(vals) != 2 or any(len(row) != 2 for row in vals):
        raise ShapeMismatch("exact cocycles are 2x2 tables")
    table = tuple(
        tuple(parse_element(a) if isinstance(a, str) else a for a in row) for row in vals
    )
    one = QiRatFunc.of(1)
    for s in range(2):
        for t in range(2):
            if (s == 0 or t == 0) and table[s][t] != one:
                raise NotNormalized("", s, t)
    for s in range(2):
        for t in range(2):
            if not table[s][t]:
                raise NotSValued("zero value", s, t)
            for m in range(2):
                if val_at(table[s][t], m) < 0:
                    raise NotSValued("pole at a maximal ideal", s, t, m)
    for s in range(2):
        for t in range(2):
            for g in range(2):
                lhs = galois(s, table[t][g]) * table[s][t ^ g]
                rhs = table[s][t] * table[s ^ t][g]
                if lhs != rhs:
                    raise CocycleIdentityViolated("exact identity", s, t, g)
    return ExactCocycle(table)


def to_valuation_model(f: ExactCocycle) -> ValCocycle:
    vals = [[[val_at(f.vals[s][t], m) for m in range(2)] for t in range(2)] for s in range(2)]
    return validate_cocycle(vals, example_setup())


def coboundary_twist(f: ExactCocycle, c: Sequence[QiRatFunc]) -> tuple:
    """Table of ``c_s s(c_t) c_{st}^-1 f(s, t)``."""
    return tuple(
        tuple(c[s] * galois(s, c[t]) / c[s ^ t] * f.vals[s][t] for t in range(2))
        for s in range(2)
    )


def verify_coboundary_exact(f: ExactCocycle, g: ExactCocycle, c: Sequence[QiRatFunc]) -> bool:
    if len(c) != 2:
        raise ShapeMismatch("need one element per group element")
    if c[0] != QiRatFunc.of(1):
        raise ShapeMismatch("c_1 must be 1")
    if not c[1]:
        raise ZeroElement("c_sigma must be nonzero")
    return coboundary_twist(f, c) == g.vals


def unit_scale(f: ExactCocycle, c_sigma: QiRatFunc) -> ExactCocycle:
    """The cocycle cohomologous to f over S via the unit family (1, c_sigma)."""
    if not c_sigma or any(val_at(c_sigma, m) != 0 for m in range(2)):
        raise NotAUnit(f"{format_element(c_sigma) if c_sigma else '0'} is not a unit of S")
    return validate_exact_cocycle(coboundary_twist(f, (QiRatFunc.of(1), c_sigma)))


def build_example(which: str) -> ExactCocycle:
    base = QiRatFunc.make(QiPoly.make([ONE, ZERO, ONE]))  # x^2 + 1
    x = QiRatFunc.make(X)
    one = QiRatFunc.of(1)
    if which == "f1":
        top = base * x
    elif which == "f2":
        top = base * base * x
    else:
        raise ValueError(f"unknown example cocycle {which!r}; expected 'f1' or 'f2'")
    return validate_exact_cocycle(((one, one), (one, top)))
