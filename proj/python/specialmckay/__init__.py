"""Exact invariants of cyclic quotient surface singularities C_{r,a}.

Everything is computed in integer arithmetic: special representations with
their module generators, the Hirzebruch-Jung toric resolution, the
torus-fixed clusters of the Hilbert scheme of group orbits, the McKay
quiver, and a cross-validation suite that plays all of them against each
other.
"""

from ._core import (
    CartanData,
    ChartDeformation,
    CheckResult,
    ClusterIdeal,
    Error,
    ExceptionalCurve,
    FanChart,
    GCluster,
    GroupParams,
    Rational,
    ReconstructedChain,
    ResolutionData,
    SpecialReport,
    ValidationCounts,
    ValidationReport,
    __version__,
    age,
    an_corollary_check,
    bg_chart_text,
    build_resolution,
    cartan_matrix,
    chart_deformation,
    check_group,
    cluster_ideal,
    clusters_svg,
    clusters_text,
    cotangent_decomposition,
    dual_graph,
    dual_graph_dot,
    enumerate_clusters,
    g_basis,
    hj_expansion,
    intersection_matrix,
    invariant_generators,
    is_in_sl2,
    is_negative_definite,
    l_space,
    make_group,
    module_generators,
    monomial_character,
    monomial_weight,
    natural_rep_summands,
    newton_boundary,
    newton_svg,
    quiver_dot,
    quiver_graph,
    quiver_text,
    reconstruct_chain,
    report_json,
    resolution_text,
    self_intersections,
    special_reps,
    specials_text,
    surjectivity_oracle,
    sweep,
    tensor_matrix,
    write_report,
)

__all__ = [
    "CartanData",
    "ChartDeformation",
    "CheckResult",
    "ClusterIdeal",
    "Error",
    "ExceptionalCurve",
    "FanChart",
    "GCluster",
    "GroupParams",
    "Rational",
    "ReconstructedChain",
    "ResolutionData",
    "SpecialReport",
    "ValidationCounts",
    "ValidationReport",
    "__version__",
    "age",
    "an_corollary_check",
    "bg_chart_text",
    "build_resolution",
    "cartan_matrix",
    "chart_deformation",
    "check_group",
    "cluster_ideal",
    "clusters_svg",
    "clusters_text",
    "cotangent_decomposition",
    "dual_graph",
    "dual_graph_dot",
    "enumerate_clusters",
    "g_basis",
    "hj_expansion",
    "intersection_matrix",
    "invariant_generators",
    "is_in_sl2",
    "is_negative_definite",
    "l_space",
    "make_group",
    "module_generators",
    "monomial_character",
    "monomial_weight",
    "natural_rep_summands",
    "newton_boundary",
    "newton_svg",
    "quiver_dot",
    "quiver_graph",
    "quiver_text",
    "reconstruct_chain",
    "report_json",
    "resolution_text",
    "self_intersections",
    "special_reps",
    "specials_text",
    "surjectivity_oracle",
    "sweep",
    "tensor_matrix",
    "write_report",
]
