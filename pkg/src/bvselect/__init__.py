"""Set-valued analysis on finite grids: asymmetric excess geometry,
directional variations of multifunctions, bounded-variation selector
construction with machine-checkable certificates, and a contraction
iteration for set inclusions X(t) inside F(t, X(t))."""

from .inclusion import (
    InclusionProblem,
    InclusionSolution,
    ValidationCheck,
    ValidationReport,
    residual,
    solve_inclusion,
    validate_problem,
)
from .metric import (
    DEFAULT_TOL,
    CompactSet,
    MetricSpace,
    Point,
    SpaceMismatchError,
    dist_point_set,
    excess,
    hausdorff,
    project_onto,
)
from .multifun import (
    Grid,
    GridMultifunction,
    VariationReport,
    canonical_majorant,
    check_majorant,
    dir_variation_left,
    dir_variation_right,
    is_nondecreasing,
    is_nonincreasing,
    jordan_variation,
    jump_at,
    modulus_of_variation,
    variation_profile,
)
from .selector import (
    Inequality,
    SelectorCertificate,
    select_bv_left,
    select_bv_right,
    select_bv_two_sided,
    select_single_valued,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "CompactSet",
    "Grid",
    "GridMultifunction",
    "InclusionProblem",
    "InclusionSolution",
    "Inequality",
    "MetricSpace",
    "Point",
    "SelectorCertificate",
    "SpaceMismatchError",
    "ValidationCheck",
    "ValidationReport",
    "VariationReport",
    "canonical_majorant",
    "check_majorant",
    "dir_variation_left",
    "dir_variation_right",
    "dist_point_set",
    "excess",
    "hausdorff",
    "is_nondecreasing",
    "is_nonincreasing",
    "jordan_variation",
    "jump_at",
    "modulus_of_variation",
    "project_onto",
    "residual",
    "select_bv_left",
    "select_bv_right",
    "select_bv_two_sided",
    "select_single_valued",
    "solve_inclusion",
    "validate_problem",
    "variation_profile",
    "verify_certificate",
]
