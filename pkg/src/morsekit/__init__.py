"""morsekit: the Newton polytope of the Morse discriminant, in exact arithmetic.

Pipeline: validate a support set, extract combinatorial data from tropical
covectors, enumerate the realizable combinatorial types as exact rational
cones, evaluate the support function on each cone, and assemble the polytope
with fiber-polygon cross-checks.
"""

from .cones import StrictSystem, cone_constraints, enumerate_types, feasible
from .errors import (
    BadAxes,
    DegenerateHull,
    DuplicatePoint,
    HyperplaneViolation,
    MalformedInput,
    MorsekitError,
    NonIntegerCovector,
    NotGenerating,
    NotMorse,
    NotPositiveSupport,
    RootValueDegenerate,
    SlopeDegenerate,
    SupportTooLarge,
    TooShort,
    ZeroInSupport,
)
from .fiber import (
    FiberPolygon,
    StrataCounts,
    area_newton,
    area_newton_formula,
    fiber_polygon,
    newton_polygon_vertices,
    strata_counts,
    vol_fiber_closed,
    vol_fiber_trapezoids,
)
from .polytope import (
    MorsePolytope,
    build_polytope,
    convex_hull_2d,
    project_and_hull,
    render_svg,
)
from .rationals import parse_rational, rational_to_json
from .singularity import (
    FacetFunctional,
    c_coeffs,
    c_value,
    c_value_via_levels,
    c_value_via_levels_scaled,
    chi_fork,
    facet_functional,
    gcd_ladder,
    level_scan,
)
from .support_function import (
    ShiftConfig,
    maxwell_caustic_split,
    mu_coeffs,
    mu_coeffs_positive,
    mu_value,
    parse_shift,
    unit_interval_shift,
)
from .tropical import (
    Classification,
    CombinatorialType,
    Covector,
    SupportSet,
    classify,
    covector_from_values,
    extract,
    parse_input_json,
    roots_and_values,
    upper_hull,
    validate_support,
)
from .verify import run_property_suite, sample_morse_covector

__version__ = "0.1.0"

__all__ = [
    "BadAxes",
    "Classification",
    "CombinatorialType",
    "Covector",
    "DegenerateHull",
    "DuplicatePoint",
    "FacetFunctional",
    "FiberPolygon",
    "HyperplaneViolation",
    "MalformedInput",
    "MorsePolytope",
    "MorsekitError",
    "NonIntegerCovector",
    "NotGenerating",
    "NotMorse",
    "NotPositiveSupport",
    "RootValueDegenerate",
    "ShiftConfig",
    "SlopeDegenerate",
    "StrataCounts",
    "StrictSystem",
    "SupportSet",
    "SupportTooLarge",
    "TooShort",
    "ZeroInSupport",
    "area_newton",
    "area_newton_formula",
    "build_polytope",
    "c_coeffs",
    "c_value",
    "c_value_via_levels",
    "c_value_via_levels_scaled",
    "chi_fork",
    "classify",
    "cone_constraints",
    "convex_hull_2d",
    "covector_from_values",
    "enumerate_types",
    "extract",
    "facet_functional",
    "feasible",
    "fiber_polygon",
    "gcd_ladder",
    "level_scan",
    "maxwell_caustic_split",
    "mu_coeffs",
    "mu_coeffs_positive",
    "mu_value",
    "newton_polygon_vertices",
    "parse_input_json",
    "parse_rational",
    "parse_shift",
    "project_and_hull",
    "rational_to_json",
    "render_svg",
    "roots_and_values",
    "run_property_suite",
    "sample_morse_covector",
    "strata_counts",
    "unit_interval_shift",
    "upper_hull",
    "validate_support",
    "vol_fiber_closed",
    "vol_fiber_trapezoids",
]
