"""Elements of K^# up to units, recorded by their valuations at the maximal ideals.

A valuation vector ``v`` has ``v[m] = v_{M_m}(x)``.  Units of S are the zero
vector and J(V)S is ``(1, ..., 1)`` because S is unramified over V.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import CocycleIdentityViolated, NotNormalized, NotSValued, ShapeMismatch
from .groups import GaloisSetup

ValVector = tuple[int, ...]
ValTable = tuple[tuple[ValVector, ...], ...]


def zero(r: int) -> ValVector:
    return (0,) * r


def is_zero(v: ValVector) -> bool:
    return not any(v)


def vadd(a: ValVector, b: ValVector) -> ValVector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: ValVector, b: ValVector) -> ValVector:
    return tuple(x - y for x, y in zip(a, b))


def galois_act(sigma: int, v: ValVector, setup: GaloisSetup) -> ValVector:
    """Valuation vector of sigma(x) given that of x.

    Uses v_M(sigma(x)) = v_{sigma^-1(M)}(x), i.e. ``out[perms[sigma][m]] = v[m]``.
    """
    perm = setup.ideals.perms[sigma]
    out = [0] * len(v)
    for m, x in enumerate(v):
        out[perm[m]] = x
    return tuple(out)


@dataclass(frozen=True)
class ValCocycle:
    setup: GaloisSetup = field(repr=False)
    vals: ValTable

    @property
    def n(self) -> int:
        return self.setup.n

    @property
    def r(self) -> int:
        return self.setup.r

    def __getitem__(self, key: tuple[int, int]) -> ValVector:
        s, t = key
        return self.vals[s][t]

    def to_lists(self) -> list:
        return [[list(v) for v in row] for row in self.vals]


def _as_table(raw: Sequence, n: int, r: int) -> ValTable:
    if len(raw) != n or any(len(row) != n for row in raw):
        raise ShapeMismatch(f"expected a {n}x{n} table of valuation vectors")
    out = []
    for s, row in enumerate(raw):
        out_row = []
        for t, v in enumerate(row):
            if len(v) != r:
                raise ShapeMismatch(f"expected {r} exponents", s, t)
            if any(not isinstance(x, int) or isinstance(x, bool) for x in v):
                raise ShapeMismatch("exponents must be integers", s, t)
            out_row.append(tuple(v))
        out.append(tuple(out_row))
    return tuple(out)


def identity_defect(table: ValTable, setup: GaloisSetup):
    """First (sigma, tau, gamma, m) where the additive cocycle identity fails.

    The identity is ``sigma.f(tau,gamma) + f(sigma,tau gamma)
    == f(sigma,tau) + f(sigma tau,gamma)`` componentwise.  Returns None when
    it holds everywhere.
    """
    mul = setup.group.table
    n = setup.n
    for s, t, g in itertools.product(range(n), repeat=3):
        lhs = vadd(galois_act(s, table[t][g], setup), table[s][mul[t][g]])
        rhs = vadd(table[s][t], table[mul[s][t]][g])
        if lhs != rhs:
            m = next(i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b)
            return s, t, g, m
    return None


def validate_cocycle(raw: Sequence, setup: GaloisSetup) -> ValCocycle:
    n, r = setup.n, setup.r
    table = _as_table(raw, n, r)
    for s in range(n):
        for t in range(n):
            if (s == 0 or t == 0) and not is_zero(table[s][t]):
                m = next(i for i, x in enumerate(table[s][t]) if x)
                raise NotNormalized("", s, t, m)
    for s in range(n):
        for t in range(n):
            for m, x in enumerate(table[s][t]):
                if x < 0:
                    raise NotSValued("negative valuation", s, t, m)
    bad = identity_defect(table, setup)
    if bad is not None:
        raise CocycleIdentityViolated("", *bad)
    return ValCocycle(setup, table)


def trivial_cocycle(setup: GaloisSetup) -> ValCocycle:
    z = zero(setup.r)
    return ValCocycle(setup, tuple(tuple(z for _ in range(setup.n)) for _ in range(setup.n)))


def cocycle_product_exponents(sigma: int, tau: int, f: ValCocycle) -> ValVector:
    """Exponents of f(sigma, tau) in ``x_sigma x_tau = f(sigma,tau) x_{sigma tau}``."""
    if not (0 <= sigma < f.n and 0 <= tau < f.n):
        raise IndexError(f"element index out of range for order {f.n}")
    return f.vals[sigma][tau]


@dataclass(frozen=True)
class RadicalProfile:
    """J(A_f) = sum of I_tau x_tau, with I_tau the product of the M not
    containing f(tau, tau^-1)."""

    setup: GaloisSetup = field(repr=False)
    iexps: tuple[ValVector, ...]

    def matrix(self) -> list[list[int]]:
        return [list(v) for v in self.iexps]


def radical_profile(f: ValCocycle) -> RadicalProfile:
    inv = f.setup.group.inv
    rows = tuple(
        tuple(1 if x == 0 else 0 for x in f.vals[t][inv(t)]) for t in range(f.n)
    )
    return RadicalProfile(f.setup, rows)


def lemma_check(f: ValCocycle) -> tuple[bool, int | None]:
    """Check that tau^-1 carries I_tau onto I_{tau^-1} for every tau.

    Returns ``(True, None)`` or ``(False, tau)`` for the first failing tau.
    """
    prof = radical_profile(f)
    inv = f.setup.group.inv
    for t in range(f.n):
        if galois_act(inv(t), prof.iexps[t], f.setup) != prof.iexps[inv(t)]:
            return False, t
    return True, None
