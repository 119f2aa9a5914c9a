"""Coboundaries, valuation-level cohomology tests, and cocycle sampling.

Variables are always ordered element-major, then ideal index, with the
identity element left out (its cochain value is pinned to zero).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import CapExhausted, Infeasible, SetupMismatch, ShapeMismatch
from .groups import GaloisSetup
from .intlinalg import SparseRow, hermite_basis, integer_kernel, solve_integer
from .valuation import (
    ValCocycle,
    ValTable,
    ValVector,
    galois_act,
    identity_defect,
    validate_cocycle,
    vadd,
    vsub,
    zero,
)


@dataclass(frozen=True)
class CoboundaryWitness:
    """Valuation vectors of a family {c_sigma} with c_1 = 1."""

    setup: GaloisSetup = field(repr=False)
    cvecs: tuple[ValVector, ...]

    def to_lists(self) -> list[list[int]]:
        return [list(v) for v in self.cvecs]


def make_witness(setup: GaloisSetup, cvecs: Sequence[Sequence[int]]) -> CoboundaryWitness:
    if len(cvecs) != setup.n or any(len(v) != setup.r for v in cvecs):
        raise ShapeMismatch(f"witness must be {setup.n}x{setup.r}")
    if any(cvecs[0]):
        raise ShapeMismatch("witness entry for the identity must be zero")
    return CoboundaryWitness(setup, tuple(tuple(int(x) for x in v) for v in cvecs))


def coboundary_of(w: CoboundaryWitness) -> ValTable:
    """``c_sigma + sigma(c_tau) - c_{sigma tau}`` for every pair."""
    setup = w.setup
    mul = setup.group.table
    c = w.cvecs
    return tuple(
        tuple(
            vsub(vadd(c[s], galois_act(s, c[t], setup)), c[mul[s][t]])
            for t in range(setup.n)
        )
        for s in range(setup.n)
    )


def add_tables(a: ValTable, b: ValTable) -> ValTable:
    return tuple(tuple(vadd(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub_tables(a: ValTable, b: ValTable) -> ValTable:
    return tuple(tuple(vsub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def twist_by(f: ValCocycle, w: CoboundaryWitness) -> ValCocycle:
    """The cocycle g with g = c_sigma sigma(c_tau) c_{sigma tau}^-1 f, validated."""
    _same_setup(f.setup, w.setup)
    return validate_cocycle(add_tables(f.vals, coboundary_of(w)), f.setup)


def _same_setup(a: GaloisSetup, b: GaloisSetup) -> None:
    if a is not b and a != b:
        raise SetupMismatch("cocycles live on different setups")


# --- linear systems ---------------------------------------------------------


def _inv_perm(setup: GaloisSetup, s: int) -> tuple[int, ...]:
    return setup.ideals.perms[setup.group.inv(s)]


@lru_cache(maxsize=64)
def _coboundary_rows(setup: GaloisSetup) -> tuple[tuple[tuple[int, int, int], ...], tuple[SparseRow, ...]]:
    """Rows of the map c -> coboundary_of(c), one per (sigma, tau, m), sigma, tau != 1."""
    n, r = setup.n, setup.r
    mul = setup.group.table

    def var(s, m):
        return (s - 1) * r + m

    keys, rows = [], []
    for s, t in itertools.product(range(1, n), repeat=2):
        back = _inv_perm(setup, s)
        st = mul[s][t]
        for m in range(r):
            row: dict[int, int] = {}
            for idx, coef in ((var(s, m), 1), (var(t, back[m]), 1)):
                row[idx] = row.get(idx, 0) + coef
            if st != 0:
                row[var(st, m)] = row.get(var(st, m), 0) - 1
            keys.append((s, t, m))
            rows.append({k: v for k, v in row.items() if v})
    return tuple(keys), tuple(rows)


@lru_cache(maxsize=64)
def _cocycle_rows(setup: GaloisSetup) -> tuple[SparseRow, ...]:
    """Additive cocycle identity over non-identity triples, on the non-identity entries."""
    n, r = setup.n, setup.r
    mul = setup.group.table

    def var(s, t, m):
        return ((s - 1) * (n - 1) + (t - 1)) * r + m

    rows = []
    seen = set()
    for s, t, g in itertools.product(range(1, n), repeat=3):
        back = _inv_perm(setup, s)
        for m in range(r):
            row: dict[int, int] = {}
            terms = (
                (t, g, back[m], 1),
                (s, mul[t][g], m, 1),
                (s, t, m, -1),
                (mul[s][t], g, m, -1),
            )
            for a, b, k, coef in terms:
                if a != 0 and b != 0:
                    idx = var(a, b, k)
                    row[idx] = row.get(idx, 0) + coef
            row = {k: v for k, v in row.items() if v}
            key = tuple(sorted(row.items()))
            if row and key not in seen:
                seen.add(key)
                rows.append(row)
    return tuple(rows)


def _table_from_flat(setup: GaloisSetup, flat: Sequence[int]) -> ValTable:
    n, r = setup.n, setup.r
    z = zero(r)
    out = []
    for s in range(n):
        row = []
        for t in range(n):
            if s == 0 or t == 0:
                row.append(z)
            else:
                base = ((s - 1) * (n - 1) + (t - 1)) * r
                row.append(tuple(flat[base : base + r]))
        out.append(tuple(row))
    return tuple(out)


def _flat_from_table(table: ValTable) -> list[int]:
    n = len(table)
    return [x for s in range(1, n) for t in range(1, n) for x in table[s][t]]


def _witness_from_flat(setup: GaloisSetup, flat: Sequence[int]) -> CoboundaryWitness:
    r = setup.r
    cvecs = [zero(r)] + [tuple(flat[(s - 1) * r : s * r]) for s in range(1, setup.n)]
    return CoboundaryWitness(setup, tuple(cvecs))


def _solve_coboundary(setup: GaloisSetup, target: ValTable) -> CoboundaryWitness | None:
    """Canonical integer c with coboundary_of(c) == target, or None."""
    n = setup.n
    for s in range(n):
        for t in range(n):
            if (s == 0 or t == 0) and any(target[s][t]):
                return None
    if n == 1:
        return _witness_from_flat(setup, [])
    keys, rows = _coboundary_rows(setup)
    rhs = [target[s][t][m] for s, t, m in keys]
    x, _ = solve_integer(rows, rhs, (n - 1) * setup.r)
    if x is None:
        return None
    w = _witness_from_flat(setup, x)
    if coboundary_of(w) != target:
        raise AssertionError("integer solver returned a non-solution")
    return w


def is_cohomologous_K_valuation(f: ValCocycle, g: ValCocycle) -> CoboundaryWitness | None:
    """Witness {v(c_sigma)} with g = f + coboundary, or None if none exists over Z.

    Among all solutions the canonical one is returned: it is reduced modulo the
    kernel's Hermite basis (pivots at trailing variables), so it is unique.
    """
    _same_setup(f.setup, g.setup)
    return _solve_coboundary(f.setup, sub_tables(g.vals, f.vals))


def is_cohomologous_S_valuation(f: ValCocycle, g: ValCocycle) -> bool:
    """Necessary condition for f ~_S g: unit coboundaries have zero valuations."""
    _same_setup(f.setup, g.setup)
    return f.vals == g.vals


@dataclass(frozen=True)
class CocycleLattice:
    setup: GaloisSetup = field(repr=False)
    basis: tuple[ValTable, ...]
    particular: CoboundaryWitness | None = None

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, table: ValTable) -> bool:
        n = self.setup.n
        normal = all(not any(table[0][t]) and not any(table[t][0]) for t in range(n))
        return normal and identity_defect(table, self.setup) is None


@lru_cache(maxsize=64)
def _lattice_basis(setup: GaloisSetup) -> tuple[ValTable, ...]:
    n, r = setup.n, setup.r
    if n == 1:
        return ()
    ker = integer_kernel(_cocycle_rows(setup), (n - 1) * (n - 1) * r)
    return tuple(_table_from_flat(setup, v) for v in ker)


def cocycle_lattice(setup: GaloisSetup, pin: ValTable | None = None) -> CocycleLattice:
    """Integer basis of normalized additive cocycles on ``setup``.

    With ``pin``, also solve for a witness whose coboundary is ``pin``;
    raises Infeasible if there is none.
    """
    basis = _lattice_basis(setup)
    if pin is None:
        return CocycleLattice(setup, basis)
    w = _solve_coboundary(setup, pin)
    if w is None:
        raise Infeasible("pinned table is not an integer coboundary")
    return CocycleLattice(setup, basis, w)


def coboundary_basis(setup: GaloisSetup) -> list[ValTable]:
    """Hermite basis of the coboundary sublattice."""
    n, r = setup.n, setup.r
    gens = []
    for s in range(1, n):
        for m in range(r):
            c = [zero(r)] * n
            c[s] = tuple(1 if k == m else 0 for k in range(r))
            gens.append(_flat_from_table(coboundary_of(CoboundaryWitness(setup, tuple(c)))))
    return [_table_from_flat(setup, v) for v in hermite_basis(gens)]


# --- sampling ---------------------------------------------------------------


def _shortest_lengths(setup: GaloisSetup, t: ValTable, weights) -> list[list[int]] | None:
    """Twisted word lengths ell[g][m] for the cocycle ``t``.

    For a start label m, walk the states p in G along edges p -> p*g costing
    ``weights[g][p^-1 m] + t(p, g)[m]``.  The cocycle identity makes these
    distances subadditive in the twisted sense, so ``t + coboundary(ell)`` is
    nonnegative.  Returns None if some start label has a negative cycle.
    """
    n, r = setup.n, setup.r
    grp = setup.group
    mul = grp.table
    ell = [[0] * r for _ in range(n)]
    for m in range(r):
        label = [setup.act(grp.inv(p), m) for p in range(n)]
        dist: list[int | None] = [None] * n
        dist[0] = 0
        for _ in range(n):
            changed = False
            for p in range(n):
                dp = dist[p]
                if dp is None:
                    continue
                lp = label[p]
                row = t[p]
                for g in range(1, n):
                    q = mul[p][g]
                    cand = dp + weights[g][lp] + row[g][m]
                    if dist[q] is None or cand < dist[q]:
                        dist[q] = cand
                        changed = True
            if not changed:
                break
        else:
            return None
        for p in range(n):
            ell[p][m] = dist[p]
    return ell


def _random_lattice_point(rng: random.Random, basis: Sequence[ValTable], setup: GaloisSetup) -> ValTable:
    n, r = setup.n, setup.r
    acc = [[[0] * r for _ in range(n)] for _ in range(n)]
    if basis:
        k = rng.randint(0, min(3, len(basis)))
        for b in rng.sample(range(len(basis)), k):
            coef = rng.choice((-2, -1, 1, 2))
            for s in range(n):
                for t in range(n):
                    row = acc[s][t]
                    for m, x in enumerate(basis[b][s][t]):
                        row[m] += coef * x
    return tuple(tuple(tuple(v) for v in row) for row in acc)


def sample_cocycles(
    setup: GaloisSetup,
    max_exponent: int,
    count: int,
    seed: int,
    max_attempts: int | None = None,
) -> list[ValCocycle]:
    """Deterministic sample of distinct S-valued cocycles with exponents <= max_exponent.

    Each candidate is a random small integer combination of the lattice basis,
    moved into the nonnegative cone by adding the coboundary of its twisted
    word-length function (a lattice element as well), then kept only if every
    exponent is at most ``max_exponent``.  Output order is discovery order.
    """
    if max_exponent < 0:
        raise ValueError("max_exponent must be nonnegative")
    rng = random.Random(seed)
    basis = _lattice_basis(setup)
    n, r = setup.n, setup.r
    cap = max_attempts if max_attempts is not None else 200 * count + 2000
    found: list[ValCocycle] = []
    seen: set[ValTable] = set()
    attempts = 0
    while len(found) < count and attempts < cap:
        attempts += 1
        t = _random_lattice_point(rng, basis, setup)
        top = rng.randint(0, max(1, max_exponent))
        weights = [[rng.randint(0, top) for _ in range(r)] for _ in range(n)]
        ell = None
        for _ in range(8):
            ell = _shortest_lengths(setup, t, weights)
            if ell is not None:
                break
            weights = [[x + 1 for x in row] for row in weights]
        if ell is None:
            continue
        w = CoboundaryWitness(setup, tuple(tuple(v) for v in ell))
        table = add_tables(t, coboundary_of(w))
        if any(x > max_exponent for row in table for v in row for x in v):
            continue
        if table in seen:
            continue
        seen.add(table)
        found.append(validate_cocycle(table, setup))
    if len(found) < count:
        raise CapExhausted(len(found), count, attempts, found)
    return found
