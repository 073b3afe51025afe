"""Efficient weight vectors of reciprocal pairwise-comparison matrices.

Exact rational arithmetic throughout; indices are 0-based in the API.
"""

from .core import (
    MonomialMap,
    ReciprocalMatrix,
    apply_monomial,
    inv_transpose,
    is_consistent,
    monomial_conjugate,
    ratio_matrix,
    validate_reciprocal,
)
from .cycles import GammaSet, HCycle, cycle_product, enumerate_hcycles, gamma_set, min_cycles, path_product
from .efficiency import (
    EfficiencyReport,
    digraph_oracle,
    efficiency_report,
    in_cone,
    is_efficient,
    refute_by_perturbation,
    sample_cone,
)
from .equality import (
    EqualityVerdict,
    SpcForm,
    Status,
    decide_equal_efficient_sets,
    dominance,
    dominates,
    extreme_transfer_check,
    l_equal,
    search_counterexamples,
    spc_efficiency,
    spc_form,
    undominated,
)
from .errors import EffmatError
from .orders import (
    OrderPartition,
    cone_unique_order,
    global_pairwise_above,
    global_unique_order,
    pairwise_above,
    partial_order_partition,
)
from .paths import (
    attain_set,
    cone_inclusion_test,
    cone_interval,
    extreme_vector,
    extreme_vectors,
    global_bounds,
    path_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "EfficiencyReport",
    "EffmatError",
    "EqualityVerdict",
    "GammaSet",
    "HCycle",
    "MonomialMap",
    "OrderPartition",
    "ReciprocalMatrix",
    "SpcForm",
    "Status",
    "apply_monomial",
    "attain_set",
    "cone_inclusion_test",
    "cone_interval",
    "cone_unique_order",
    "cycle_product",
    "decide_equal_efficient_sets",
    "digraph_oracle",
    "dominance",
    "dominates",
    "efficiency_report",
    "enumerate_hcycles",
    "extreme_transfer_check",
    "extreme_vector",
    "extreme_vectors",
    "gamma_set",
    "global_bounds",
    "global_pairwise_above",
    "global_unique_order",
    "in_cone",
    "inv_transpose",
    "is_consistent",
    "is_efficient",
    "l_equal",
    "min_cycles",
    "monomial_conjugate",
    "pairwise_above",
    "partial_order_partition",
    "path_matrix",
    "path_product",
    "ratio_matrix",
    "refute_by_perturbation",
    "sample_cone",
    "search_counterexamples",
    "spc_efficiency",
    "spc_form",
    "undominated",
    "validate_reciprocal",
]
