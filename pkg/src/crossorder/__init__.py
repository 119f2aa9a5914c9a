"""Hereditary and maximal crossed-product orders over discrete valuation rings.

The core objects are a :class:`~crossorder.groups.GaloisSetup` (a finite group
acting transitively on the maximal ideals of S) and a
:class:`~crossorder.valuation.ValCocycle` (the valuation table of a normalized
two-cocycle with values in S).  :func:`~crossorder.classify.classify` answers
every structural question about the crossed-product order they define.
"""

from .classify import (
    ClassificationReport,
    classify,
    compute_H,
    graph_of_f,
    hereditary_oracle,
    is_azumaya,
    is_hereditary,
    is_hereditary_allpairs,
    is_maximal,
    is_maximal_dvr,
    is_maximal_given_primary,
    left_order_exponents,
    localize_at_ideal,
    restrict,
)
from .cohomology import (
    CoboundaryWitness,
    coboundary_of,
    cocycle_lattice,
    is_cohomologous_K_valuation,
    is_cohomologous_S_valuation,
    sample_cocycles,
)
from .groups import GaloisSetup, Subgroup, example_setup, make_setup, validate_setup
from .valuation import ValCocycle, galois_act, lemma_check, radical_profile, validate_cocycle

__version__ = "0.1.0"
