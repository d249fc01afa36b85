"""trifill: concurrence-triangle entanglement measures for three qubits.

The squared one-to-other concurrences of a three-qubit pure state form the
edges of a triangle; its normalized area (the concurrence fill) is a
genuine multipartite entanglement measure.  This package computes the
triangle and every measure attached to it, classifies states into the four
entanglement classes, and ships seeded Monte Carlo suites that verify the
underlying inequalities and theorems numerically.
"""

from . import errors
from .classify import (
    GmeConditions,
    StateClass,
    StateKind,
    check_gme_conditions,
    classify,
    classify_triangle,
    is_degenerate_triangle,
)
from .measures import (
    ConcurrenceTriangle,
    MeasureReport,
    batch_edges,
    batch_fill,
    batch_pair_concurrences,
    batch_tangle,
    concurrence_fill,
    concurrence_triangle,
    full_report,
    ggm,
    global_entanglement,
    gmc,
    one_to_other_concurrence_sq,
    schmidt_weight,
    sigma_measure,
    three_tangle,
    three_tangle_ckw,
    wootters_concurrence,
)
from .states import (
    CanonicalParams,
    DensityMatrix,
    NAMED_STATE_NAMES,
    ThreeQubitState,
    apply_local_unitary,
    canonical_amplitudes,
    emit_state,
    from_canonical,
    haar_amplitudes,
    named_state,
    parse_state,
    partial_trace_pair,
    partial_trace_single,
    sample_canonical,
    sample_haar,
    sample_local_unitaries,
)
from .verify import (
    InequivalenceScan,
    SUITE_NAMES,
    VerificationReport,
    check_ckw_consistency,
    check_f_ratio_monotonicity,
    check_lu_invariance,
    check_no_area_theorem,
    check_polygon_inequality,
    check_squared_inequality,
    check_y_polygon,
    find_inequivalence_pairs,
    measures_disagree,
    polygon_slack,
    run_suite,
    squared_slack,
    violates_no_area,
    y_polygon_slack,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "__version__",
    # states
    "ThreeQubitState",
    "DensityMatrix",
    "CanonicalParams",
    "NAMED_STATE_NAMES",
    "named_state",
    "from_canonical",
    "partial_trace_single",
    "partial_trace_pair",
    "apply_local_unitary",
    "parse_state",
    "emit_state",
    "haar_amplitudes",
    "canonical_amplitudes",
    "sample_haar",
    "sample_canonical",
    "sample_local_unitaries",
    # measures
    "ConcurrenceTriangle",
    "MeasureReport",
    "one_to_other_concurrence_sq",
    "concurrence_triangle",
    "concurrence_fill",
    "global_entanglement",
    "gmc",
    "ggm",
    "wootters_concurrence",
    "three_tangle",
    "three_tangle_ckw",
    "sigma_measure",
    "schmidt_weight",
    "full_report",
    "batch_edges",
    "batch_fill",
    "batch_tangle",
    "batch_pair_concurrences",
    # classification
    "StateKind",
    "StateClass",
    "GmeConditions",
    "classify",
    "classify_triangle",
    "check_gme_conditions",
    "is_degenerate_triangle",
    # verification
    "VerificationReport",
    "InequivalenceScan",
    "SUITE_NAMES",
    "run_suite",
    "polygon_slack",
    "squared_slack",
    "y_polygon_slack",
    "violates_no_area",
    "measures_disagree",
    "check_polygon_inequality",
    "check_squared_inequality",
    "check_y_polygon",
    "check_no_area_theorem",
    "check_f_ratio_monotonicity",
    "check_ckw_consistency",
    "check_lu_invariance",
    "find_inequivalence_pairs",
]
