"""Friendship digraphs: construction, verification, classification, search.

A friendship digraph is a loopless simple digraph in which every pair
of distinct vertices has exactly one common out-neighbor.  This package
builds the two families such digraphs come in (fancy wheels, and
k-regular digraphs realized from symmetric (k*k-k+1, k, 1) block
designs), verifies the structural properties any friendship digraph
must satisfy, classifies arbitrary digraphs, and exhaustively
enumerates all friendship digraphs of small order.
"""

from . import errors
from .construct import (
    HallReport,
    Matching,
    Sdr,
    bipartite_max_matching,
    check_hall_condition,
    complement_sdr,
    digraph_from_sbibd,
    fancy_wheel,
)
from .designs import (
    ConditionCheck,
    Design,
    ValidationReport,
    design_from_digraph,
    projective_plane,
    validate_sbibd,
)
from .digraph import Digraph
from .gf import FieldElement, FiniteField, make_field
from .search import (
    SearchConfig,
    canonical_form,
    enumerate_friendship_digraphs,
    is_isomorphic,
)
from .verify import (
    CONSEQUENCE_CHECKS,
    FANCY_WHEEL,
    NOT_FRIENDSHIP,
    REGULAR,
    Classification,
    PropertyReport,
    check_degree_balance,
    check_min_outdegree,
    check_nonadjacent_degree_equality,
    check_product_bound,
    check_reversal_friendship,
    check_sum_identity,
    classify,
    is_friendship,
    wheel_cycle_lengths,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "Digraph",
    "FieldElement",
    "FiniteField",
    "make_field",
    "ConditionCheck",
    "Design",
    "ValidationReport",
    "design_from_digraph",
    "projective_plane",
    "validate_sbibd",
    "HallReport",
    "Matching",
    "Sdr",
    "bipartite_max_matching",
    "check_hall_condition",
    "complement_sdr",
    "digraph_from_sbibd",
    "fancy_wheel",
    "SearchConfig",
    "canonical_form",
    "enumerate_friendship_digraphs",
    "is_isomorphic",
    "CONSEQUENCE_CHECKS",
    "FANCY_WHEEL",
    "NOT_FRIENDSHIP",
    "REGULAR",
    "Classification",
    "PropertyReport",
    "check_degree_balance",
    "check_min_outdegree",
    "check_nonadjacent_degree_equality",
    "check_product_bound",
    "check_reversal_friendship",
    "check_sum_identity",
    "classify",
    "is_friendship",
    "wheel_cycle_lengths",
]
