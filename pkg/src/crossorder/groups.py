"""Finite groups as explicit multiplication tables, acting on ideal labels.

Elements are indices ``0..n-1`` with the identity pinned at 0.  The group acts
on the maximal ideals of S, labelled ``0..r-1``, by a left action:
``perms[g*h] == perms[g] o perms[h]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    ActionNotHomomorphism,
    ActionNotTransitive,
    NoIdentity,
    NotASubgroup,
    NotAssociative,
    NotPermutationTable,
    ParseError,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    names: tuple[str, ...]
    table: Table

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def inv(self, g: int) -> int:
        return self.inverses[g]

    @property
    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class IdealAction:
    count: int
    perms: Table

    def __call__(self, g: int, m: int) -> int:
        return self.perms[g][m]


@dataclass(frozen=True)
class GaloisSetup:
    """A group with a transitive action on ``r`` maximal-ideal labels.

    S is assumed unramified over V, so J(V)S has valuation vector (1, ..., 1).
    """

    group: FiniteGroup
    ideals: IdealAction

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def r(self) -> int:
        return self.ideals.count

    def act(self, g: int, m: int) -> int:
        return self.ideals.perms[g][m]

    def to_dict(self) -> dict:
        return {
            "group": {
                "order": self.group.order,
                "names": list(self.group.names),
                "table": [list(row) for row in self.group.table],
            },
            "ideals": {
                "count": self.ideals.count,
                "action": [list(p) for p in self.ideals.perms],
            },
        }


@dataclass(frozen=True)
class Subgroup:
    parent: GaloisSetup = field(repr=False, compare=False)
    members: tuple[int, ...]

    def __contains__(self, g: int) -> bool:
        return g in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    def names(self) -> list[str]:
        return [self.parent.group.names[g] for g in self.members]


# --- validation -------------------------------------------------------------


def _is_perm(row: Sequence[int], size: int) -> bool:
    return sorted(row) == list(range(size))


def validate_group(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroup:
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise NotPermutationTable("table must be a non-empty square array")
    if any(not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n for row in table for x in row):
        raise NotPermutationTable("entries must be element indices")
    for j in range(n):
        if table[0][j] != j:
            raise NoIdentity("index 0 is not a left identity", 0, j)
        if table[j][0] != j:
            raise NoIdentity("index 0 is not a right identity", j, 0)
    for i in range(n):
        if not _is_perm(table[i], n):
            raise NotPermutationTable("row is not a permutation", i)
    for j in range(n):
        if not _is_perm([table[i][j] for i in range(n)], n):
            raise NotPermutationTable("column is not a permutation", j)
    for i, j, k in itertools.product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NotAssociative("", i, j, k)
    if names is None:
        names = ["1"] + [f"g{i}" for i in range(1, n)]
    if len(names) != n:
        raise ParseError(f"expected {n} element names, got {len(names)}")
    return FiniteGroup(n, tuple(str(s) for s in names), tuple(tuple(row) for row in table))


def validate_action(group: FiniteGroup, perms: Sequence[Sequence[int]]) -> IdealAction:
    n = group.order
    if len(perms) != n or not perms:
        raise NotPermutationTable(f"action needs one permutation per element ({n})")
    r = len(perms[0])
    if r == 0:
        raise NotPermutationTable("action must act on at least one ideal")
    for g, p in enumerate(perms):
        if len(p) != r or not _is_perm(p, r):
            raise NotPermutationTable("action entry is not a permutation", g)
    if list(perms[0]) != list(range(r)):
        raise ActionNotHomomorphism("identity must act trivially", 0)
    for a, b in itertools.product(range(n), repeat=2):
        ab = group.table[a][b]
        for m in range(r):
            if perms[ab][m] != perms[a][perms[b][m]]:
                raise ActionNotHomomorphism("", a, b)
    reached = {perms[g][0] for g in range(n)}
    if len(reached) != r:
        missing = min(set(range(r)) - reached)
        raise ActionNotTransitive("ideal not in the orbit of 0", missing)
    return IdealAction(r, tuple(tuple(p) for p in perms))


def make_setup(
    table: Sequence[Sequence[int]],
    action: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
) -> GaloisSetup:
    group = validate_group(table, names)
    return GaloisSetup(group, validate_action(group, action))


def validate_setup(raw: Mapping) -> GaloisSetup:
    """Build a GaloisSetup from a parsed setup document.

    ``raw`` has the shape ``{"group": {"order", "names", "table"},
    "ideals": {"count", "action"}}``.
    """
    try:
        g = raw["group"]
        ideals = raw["ideals"]
        table = g["table"]
        names = g.get("names")
        order = g.get("order", len(table))
        count = ideals["count"]
        action = ideals["action"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed setup document: {exc!r}") from exc
    if not isinstance(table, list) or not isinstance(action, list):
        raise ParseError("table and action must be arrays")
    if order != len(table):
        raise ParseError(f"order {order} does not match table size {len(table)}")
    setup = make_setup(table, action, names)
    if count != setup.r:
        raise ParseError(f"ideal count {count} does not match action width {setup.r}")
    return setup


# --- operations -------------------------------------------------------------


def inverse(g: int, group: FiniteGroup) -> int:
    return group.inv(g)


def subgroup(setup: GaloisSetup, members: Iterable[int]) -> Subgroup:
    """Checked constructor: raises NotASubgroup unless members are closed."""
    ms = sorted(set(members))
    grp = setup.group
    if 0 not in ms:
        raise NotASubgroup("missing identity")
    mset = set(ms)
    for a in ms:
        if grp.inv(a) not in mset:
            raise NotASubgroup("not closed under inversion", a)
        for b in ms:
            if grp.mul(a, b) not in mset:
                raise NotASubgroup("not closed under multiplication", a, b)
    return Subgroup(setup, tuple(ms))


def whole_group(setup: GaloisSetup) -> Subgroup:
    return Subgroup(setup, tuple(range(setup.n)))


def trivial_subgroup(setup: GaloisSetup) -> Subgroup:
    return Subgroup(setup, (0,))


def generated_subgroup(setup: GaloisSetup, gens: Iterable[int]) -> Subgroup:
    grp = setup.group
    elems = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = grp.mul(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return Subgroup(setup, tuple(sorted(elems)))


def all_subgroups(setup: GaloisSetup) -> list[Subgroup]:
    """Every subgroup, by joining cyclic subgroups to a fixpoint.

    Fine for the explicit tables this package handles (order <= 64).
    """
    found = {generated_subgroup(setup, [g]).members for g in range(setup.n)}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                j = generated_subgroup(setup, a + b).members
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return [Subgroup(setup, m) for m in sorted(found, key=lambda m: (len(m), m))]


def decomposition_group(M: int, setup: GaloisSetup) -> Subgroup:
    return Subgroup(setup, tuple(g for g in range(setup.n) if setup.act(g, M) == M))


def right_cosets(sub: Subgroup) -> list[tuple[int, ...]]:
    """Classes ``Hg``, ordered by smallest member."""
    grp = sub.parent.group
    return _partition(tuple(sorted({grp.mul(h, g) for h in sub})) for g in grp.elements)


def left_cosets(sub: Subgroup) -> list[tuple[int, ...]]:
    """Classes ``gH``, ordered by smallest member."""
    grp = sub.parent.group
    return _partition(tuple(sorted({grp.mul(g, h) for h in sub})) for g in grp.elements)


def _partition(classes: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(set(classes))


def orbit(M: int, sub: Subgroup) -> frozenset[int]:
    setup = sub.parent
    return frozenset(setup.act(h, M) for h in sub)


def orbits(sub: Subgroup) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for m in range(sub.parent.r):
        if m not in seen:
            o = orbit(m, sub)
            seen |= o
            out.append(o)
    return out


# --- standard groups and actions --------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    names = ["1"] + ["s" if k == 1 else f"s^{k}" for k in range(1, n)]
    return validate_group([[(i + j) % n for j in range(n)] for i in range(n)], names)


def klein_group() -> FiniteGroup:
    # C2 x C2 with elements encoded as 2-bit vectors, product is xor
    return validate_group([[i ^ j for j in range(4)] for i in range(4)], ["1", "a", "b", "ab"])


def symmetric_group(k: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]
    names = ["1" if p == tuple(range(k)) else "".join(map(str, p)) for p in perms]
    return validate_group(table, names)


def coset_action(group: FiniteGroup, members: Iterable[int]) -> IdealAction:
    """Left multiplication action of ``group`` on the left cosets of a subgroup.

    Cosets are labelled in order of their smallest element, so the subgroup
    itself is label 0 and is the stabiliser of that label.
    """
    members = sorted(set(members))
    cosets = sorted({tuple(sorted(group.mul(g, h) for h in members)) for g in group.elements})
    label = {}
    for i, c in enumerate(cosets):
        for g in c:
            label[g] = i
    perms = [[label[group.mul(g, c[0])] for c in cosets] for g in group.elements]
    return validate_action(group, perms)


def setup_from_coset_action(group: FiniteGroup, members: Iterable[int]) -> GaloisSetup:
    return GaloisSetup(group, coset_action(group, members))


def example_setup() -> GaloisSetup:
    """C2 = <sigma> swapping the two ideals (x+i)S and (x-i)S of Q(i)[x]."""
    return make_setup([[0, 1], [1, 0]], [[0, 1], [1, 0]], ["1", "sigma"])
