"""Fuzzy star-shaped numbers under the level-set L_p metric."""

from .diagnostics import (
    EVIDENCE_NOTE,
    VERDICT_BOUND_VIOLATED,
    VERDICT_CONSISTENT,
    VERDICT_EQUI_VIOLATED,
    EpsNet,
    FamilyReport,
    equi_modulus,
    greedy_epsilon_net,
    pairwise_distances,
    precompactness_report,
    uniform_bound,
)
from .fuzzy import (
    LABEL_FUZZY_NUMBER,
    LABEL_FUZZY_STAR_SHAPED,
    LABEL_NEITHER,
    ClassificationReport,
    LevelFuzzySet,
    LevelStackError,
    alpha_cut,
    classify,
    crisp,
    level_kernels,
    make_fuzzy,
    membership,
    scale,
    translate,
)
from .geometry import (
    GEOM_TOL,
    CompactSet,
    DimensionMismatch,
    GeometryError,
    Interval,
    InvalidPolygon,
    KernelResult,
    Polygon,
    directed_hausdorff,
    hausdorff,
    is_convex,
    is_star_shaped,
    max_norm_on_set,
    point_to_set_distance,
    polygon_kernel,
)
from .metric import (
    ModulusCurve,
    QuadratureError,
    constant_cuts,
    dp_distance,
    dp_distance_quadrature,
    find_delta,
    left_continuity_modulus,
    left_continuity_modulus_quadrature,
    modulus_curve,
    p_mean_norm,
    trapezoidal_cuts,
    triangular_cuts,
)
from .serialize import (
    DiagnoseConfig,
    DocumentError,
    emit_fuzzy,
    fuzzy_from_dict,
    fuzzy_to_dict,
    parse_config,
    parse_fuzzy,
)

__version__ = "0.1.0"

__all__ = [
    "CompactSet",
    "ClassificationReport",
    "DiagnoseConfig",
    "DimensionMismatch",
    "DocumentError",
    "EVIDENCE_NOTE",
    "EpsNet",
    "FamilyReport",
    "GEOM_TOL",
    "GeometryError",
    "Interval",
    "InvalidPolygon",
    "KernelResult",
    "LABEL_FUZZY_NUMBER",
    "LABEL_FUZZY_STAR_SHAPED",
    "LABEL_NEITHER",
    "LevelFuzzySet",
    "LevelStackError",
    "ModulusCurve",
    "Polygon",
    "QuadratureError",
    "VERDICT_BOUND_VIOLATED",
    "VERDICT_CONSISTENT",
    "VERDICT_EQUI_VIOLATED",
    "alpha_cut",
    "classify",
    "constant_cuts",
    "crisp",
    "directed_hausdorff",
    "dp_distance",
    "dp_distance_quadrature",
    "emit_fuzzy",
    "equi_modulus",
    "find_delta",
    "fuzzy_from_dict",
    "fuzzy_to_dict",
    "greedy_epsilon_net",
    "hausdorff",
    "is_convex",
    "is_star_shaped",
    "left_continuity_modulus",
    "left_continuity_modulus_quadrature",
    "level_kernels",
    "make_fuzzy",
    "max_norm_on_set",
    "membership",
    "modulus_curve",
    "p_mean_norm",
    "pairwise_distances",
    "parse_config",
    "parse_fuzzy",
    "point_to_set_distance",
    "polygon_kernel",
    "precompactness_report",
    "scale",
    "translate",
    "trapezoidal_cuts",
    "triangular_cuts",
    "uniform_bound",
]
