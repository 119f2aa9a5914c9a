"""Shared builders for the test suite."""

from crossorder.cohomology import sample_cocycles
from crossorder.errors import CapExhausted
from crossorder.groups import (
    GaloisSetup,
    all_subgroups,
    coset_action,
    cyclic_group,
    klein_group,
    setup_from_coset_action,
    symmetric_group,
)
from crossorder.valuation import validate_cocycle

GROUPS = {
    "C2": cyclic_group(2),
    "C3": cyclic_group(3),
    "C4": cyclic_group(4),
    "C2xC2": klein_group(),
    "S3": symmetric_group(3),
}


def cocycle_on(setup, entries):
    """Validated cocycle from ``{(s, t): vector}``; unspecified entries are zero."""
    n, r = setup.n, setup.r
    raw = [[list(entries.get((s, t), (0,) * r)) for t in range(n)] for s in range(n)]
    return validate_cocycle(raw, setup)


def transitive_setups():
    """(label, setup) for every coset action of every group in GROUPS."""
    out = []
    for name, g in GROUPS.items():
        regular = GaloisSetup(g, coset_action(g, [0]))
        for sub in all_subgroups(regular):
            setup = setup_from_coset_action(g, sub.members)
            out.append((f"{name}/{list(sub.members)} r={setup.r}", setup))
    return out


def build_corpus(per_setup=12, max_exponents=(1, 2, 3), seed=2024):
    """Distinct validated cocycles across all transitive setups."""
    corpus = []
    for k, (label, setup) in enumerate(transitive_setups()):
        seen = set()
        for e in max_exponents:
            try:
                batch = sample_cocycles(setup, e, per_setup, seed + 97 * k + e, max_attempts=1500)
            except CapExhausted as exc:
                batch = exc.partial
            for f in batch:
                if f.vals not in seen:
                    seen.add(f.vals)
                    corpus.append((label, f))
    return corpus
