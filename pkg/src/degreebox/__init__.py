"""Realizability of degree-interval sequences by simple graphs.

The package decides whether a pair of bound vectors (A; B) admits a
simple graph whose i-th vertex degree lies in [a_i, b_i], evaluates the
full family of classical-style necessary/sufficient inequalities for
that question, constructs witness graphs, and cross-validates everything
against brute-force enumeration on small instances.
"""

from .criteria import (
    CriteriaReport,
    CriterionVerdict,
    check_berge_necessary,
    check_berge_sufficient,
    check_bollobas,
    check_cdz,
    check_cdz_reduced,
    check_erdos_gallai_fixed,
    check_fulkerson,
    check_fulkerson_exists,
    check_grunbaum,
    check_hasselbarth,
    criteria_report,
)
from .errors import (
    BoundExceedsPartSize,
    EntryTooLarge,
    IndexOutOfRange,
    InputError,
    LengthMismatch,
    LowerExceedsMaxDegree,
    LowerExceedsUpper,
    NegativeEntry,
    NotGoodOrder,
    NotNonIncreasing,
    SearchBudgetExceeded,
    TooLarge,
    UnknownCriterion,
)
from .oracle import (
    cross_validate,
    enumerate_instances,
    implication_matrix,
    instance_space_size,
    oracle_decide,
    oracle_realizable,
    sample_instances,
)
from .realize import (
    BipartiteGraph,
    SimpleGraph,
    check_ryser_interval,
    find_graphic_in_box,
    graphic_vector_in_box,
    havel_hakimi_realize,
    interval_bipartite_realize,
    realize_pair,
    verify_witness,
)
from .sequences import (
    IndexProfile,
    IntervalSequencePair,
    NormalizedInstance,
    berge_sequence,
    conjugate_sequence,
    crossing_index,
    crossing_indices,
    is_good_order,
    max_sum_identities_hold,
    normalize_good_order,
    parity_correction,
    parity_support,
    tilde_sequence,
    validate_and_clamp,
)

__version__ = "0.1.0"
