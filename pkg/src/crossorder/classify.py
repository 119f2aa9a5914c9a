"""Decision procedures for crossed-product orders A_f given by valuation data.

The order itself is never materialised; every question about A_f is answered
from the valuation table of f.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    InternalInconsistency,
    NotAnOrbit,
    NotDVR,
    NotPartialOrder,
    NotWellDefined,
    PrimaryNotAsserted,
    SubgroupClosureFailure,
)
from .groups import (
    GaloisSetup,
    Subgroup,
    decomposition_group,
    left_cosets,
    make_setup,
    orbit,
    right_cosets,
)
from .valuation import (
    RadicalProfile,
    ValCocycle,
    ValVector,
    is_zero,
    lemma_check,
    radical_profile,
    validate_cocycle,
)


class HereditaryWitness(NamedTuple):
    tau: int
    ideal: int
    exponent: int


class CosetWitness(NamedTuple):
    ideal: int
    coset: tuple[int, ...]


def _unit_inverse_pair(f: ValCocycle, g: int) -> bool:
    return is_zero(f.vals[g][f.setup.group.inv(g)])


def compute_H(f: ValCocycle) -> Subgroup:
    members = tuple(g for g in range(f.n) if _unit_inverse_pair(f, g))
    grp = f.setup.group
    mset = set(members)
    if 0 not in mset:
        raise SubgroupClosureFailure("identity missing")
    for a in members:
        for b in members:
            if grp.mul(a, b) not in mset:
                raise SubgroupClosureFailure(f"{a}*{b} not in H")
    return Subgroup(f.setup, members)


@dataclass(frozen=True)
class GraphOfF:
    """The partial order on G/H: sigma H <= tau H iff f(sigma, sigma^-1 tau) is a unit."""

    cosets: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]
    hasse: tuple[tuple[int, int], ...]

    def representatives(self) -> list[int]:
        return [c[0] for c in self.cosets]

    def least(self) -> int:
        return 0


def _leq_from(f: ValCocycle, s: int, t: int) -> bool:
    grp = f.setup.group
    return is_zero(f.vals[s][grp.mul(grp.inv(s), t)])


def graph_of_f(f: ValCocycle) -> GraphOfF:
    H = compute_H(f)
    cosets = tuple(left_cosets(H))
    k = len(cosets)
    leq = [[_leq_from(f, a[0], b[0]) for b in cosets] for a in cosets]

    for i, a in enumerate(cosets):
        for j, b in enumerate(cosets):
            for s in a:
                for t in b:
                    if _leq_from(f, s, t) != leq[i][j]:
                        raise NotWellDefined(f"representatives {s},{t} disagree on cosets {i},{j}")
    for i in range(k):
        if not leq[i][i]:
            raise NotPartialOrder(f"not reflexive at coset {i}")
        if not leq[0][i]:
            raise NotPartialOrder(f"H is not below coset {i}")
        for j in range(k):
            if i != j and leq[i][j] and leq[j][i]:
                raise NotPartialOrder(f"not antisymmetric at cosets {i},{j}")
            for m in range(k):
                if leq[i][j] and leq[j][m] and not leq[i][m]:
                    raise NotPartialOrder(f"not transitive at cosets {i},{j},{m}")

    hasse = []
    for i in range(k):
        for j in range(k):
            if i == j or not leq[i][j]:
                continue
            if not any(m not in (i, j) and leq[i][m] and leq[m][j] for m in range(k)):
                hasse.append((i, j))
    return GraphOfF(cosets, tuple(tuple(row) for row in leq), tuple(hasse))


def is_azumaya(f: ValCocycle) -> bool:
    return len(compute_H(f)) == f.n


def is_hereditary(f: ValCocycle) -> tuple[bool, HereditaryWitness | None]:
    """A_f is hereditary iff no f(tau, tau^-1) lies in the square of a maximal ideal."""
    inv = f.setup.group.inv
    for t in range(f.n):
        for m, e in enumerate(f.vals[t][inv(t)]):
            if e >= 2:
                return False, HereditaryWitness(t, m, e)
    return True, None


def is_hereditary_allpairs(f: ValCocycle) -> bool:
    """Same verdict from the whole table: every value of f is square-free."""
    return all(e <= 1 for row in f.vals for v in row for e in v)


def is_maximal(f: ValCocycle) -> tuple[bool, HereditaryWitness | CosetWitness | None]:
    """Hereditary, and every right coset of each D_M holds a g with f(g, g^-1) not in M."""
    ok, wit = is_hereditary(f)
    if not ok:
        return False, wit
    inv = f.setup.group.inv
    for M in range(f.r):
        for coset in right_cosets(decomposition_group(M, f.setup)):
            if not any(f.vals[g][inv(g)][M] == 0 for g in coset):
                return False, CosetWitness(M, coset)
    return True, None


def is_maximal_dvr(f: ValCocycle) -> bool:
    if f.r != 1:
        raise NotDVR(f"S has {f.r} maximal ideals")
    inv = f.setup.group.inv
    return all(f.vals[t][inv(t)][0] <= 1 for t in range(f.n))


def is_maximal_given_primary(f: ValCocycle, primary: bool | None = None) -> bool:
    """Maximality test valid only when the caller knows A_f is primary."""
    if primary is not True:
        raise PrimaryNotAsserted("caller must assert that A_f is primary")
    inv = f.setup.group.inv
    for M in range(f.r):
        D = decomposition_group(M, f.setup)
        if all(f.vals[t][inv(t)][M] <= 1 for t in D):
            return True
    return False


def restrict(f: ValCocycle, sub: Subgroup, ideals: Iterable[int]) -> ValCocycle:
    """Restrict f to ``sub x sub`` and keep only the components in one sub-orbit.

    Elements of ``sub`` are renumbered in increasing order, ideals likewise.
    """
    ideals = sorted(set(ideals))
    if not ideals or frozenset(ideals) != orbit(ideals[0], sub):
        raise NotAnOrbit(f"{ideals} is not an orbit of the subgroup {list(sub.members)}")
    setup = f.setup
    members = list(sub.members)
    pos = {g: i for i, g in enumerate(members)}
    lab = {m: i for i, m in enumerate(ideals)}
    table = [[pos[setup.group.mul(a, b)] for b in members] for a in members]
    action = [[lab[setup.act(g, m)] for m in ideals] for g in members]
    names = [setup.group.names[g] for g in members]
    new_setup = make_setup(table, action, names)
    vals = [[[f.vals[a][b][m] for m in ideals] for b in members] for a in members]
    return validate_cocycle(vals, new_setup)


def localize_at_ideal(f: ValCocycle, M: int) -> ValCocycle:
    """The cocycle f_M on D_M x D_M, valued in the DVR S_M."""
    return restrict(f, decomposition_group(M, f.setup), [M])


def left_order_exponents(f: ValCocycle) -> tuple[ValVector, ...]:
    """Least admissible valuations of k for k x_tau in the left order of J(A_f).

    ``k x_tau I_gamma x_gamma = k tau(I_gamma) f(tau, gamma) x_{tau gamma}`` must lie
    in ``I_{tau gamma} x_{tau gamma}`` for every gamma, which bounds v_M(k) below.
    Distinct tau land in distinct grades, so the left order splits gradewise.
    """
    setup = f.setup
    grp = setup.group
    I = radical_profile(f).iexps
    out = []
    for t in range(f.n):
        ti = grp.inv(t)
        bound = []
        for M in range(f.r):
            pulled = setup.act(ti, M)
            bound.append(
                max(I[grp.mul(t, g)][M] - I[g][pulled] - f.vals[t][g][M] for g in range(f.n))
            )
        out.append(tuple(bound))
    return tuple(out)


def hereditary_oracle(f: ValCocycle) -> bool:
    """True iff the left order of J(A_f) is A_f itself."""
    return all(b == 0 for v in left_order_exponents(f) for b in v)


@dataclass(frozen=True)
class LocalVerdict:
    ideal: int
    decomposition_group: tuple[int, ...]
    maximal: bool


@dataclass(frozen=True)
class ClassificationReport:
    setup: GaloisSetup = field(repr=False)
    H: Subgroup
    graph: GraphOfF
    azumaya: bool
    hereditary: bool
    maximal: bool
    radical: RadicalProfile
    localizations: tuple[LocalVerdict, ...]
    hereditary_witness: HereditaryWitness | None
    maximal_witness: HereditaryWitness | CosetWitness | None
    cross_checks: dict

    def to_dict(self) -> dict:
        names = self.setup.group.names
        hw = self.hereditary_witness
        mw = self.maximal_witness
        if isinstance(mw, CosetWitness):
            mdoc = {"kind": "coset", "ideal": mw.ideal, "coset": list(mw.coset)}
        elif isinstance(mw, HereditaryWitness):
            mdoc = {"kind": "hereditary", "tau": mw.tau, "ideal": mw.ideal, "exponent": mw.exponent}
        else:
            mdoc = None
        return {
            "H": list(self.H.members),
            "graph": {
                "cosets": [list(c) for c in self.graph.cosets],
                "labels": [_coset_label(names[c[0]]) for c in self.graph.cosets],
                "hasse_edges": [list(e) for e in self.graph.hasse],
            },
            "azumaya": self.azumaya,
            "hereditary": self.hereditary,
            "maximal": self.maximal,
            "radical": self.radical.matrix(),
            "localizations": [
                {
                    "ideal": lv.ideal,
                    "decomposition_group": list(lv.decomposition_group),
                    "maximal": lv.maximal,
                }
                for lv in self.localizations
            ],
            "witnesses": {
                "hereditary": None if hw is None else {"tau": hw.tau, "ideal": hw.ideal, "exponent": hw.exponent},
                "maximal": mdoc,
            },
            "cross_checks": dict(self.cross_checks),
        }


def _coset_label(rep_name: str) -> str:
    return "H" if rep_name == "1" else f"{rep_name}H"


def classify(f: ValCocycle) -> ClassificationReport:
    H = compute_H(f)
    graph = graph_of_f(f)
    her, hwit = is_hereditary(f)
    allpairs = is_hereditary_allpairs(f)
    oracle = hereditary_oracle(f)
    lemma_ok, lemma_tau = lemma_check(f)
    if allpairs != her:
        raise InternalInconsistency("is_hereditary", "is_hereditary_allpairs")
    if oracle != her:
        raise InternalInconsistency("is_hereditary", "hereditary_oracle")
    if not lemma_ok:
        raise InternalInconsistency("radical_profile", "lemma_check", f"tau={lemma_tau}")
    maximal, mwit = is_maximal(f)
    azumaya = len(H) == f.n
    if maximal and not her:
        raise InternalInconsistency("is_maximal", "is_hereditary")
    if azumaya and not maximal:
        raise InternalInconsistency("is_azumaya", "is_maximal")
    if f.r == 1 and is_maximal_dvr(f) != maximal:
        raise InternalInconsistency("is_maximal", "is_maximal_dvr")
    locs = []
    for M in range(f.r):
        fm = localize_at_ideal(f, M)
        D = decomposition_group(M, f.setup)
        locs.append(LocalVerdict(M, D.members, is_maximal_dvr(fm)))
    return ClassificationReport(
        setup=f.setup,
        H=H,
        graph=graph,
        azumaya=azumaya,
        hereditary=her,
        maximal=maximal,
        radical=radical_profile(f),
        localizations=tuple(locs),
        hereditary_witness=hwit,
        maximal_witness=mwit,
        cross_checks={"allpairs": True, "oracle": True, "radical_symmetry": True},
    )
