"""Sharp radii for harmonic differential operators under coefficient bounds.

The package computes the radii of univalence, full starlikeness and full
convexity of ``D_f^eps = z f_z - eps conj(z) f_zbar`` and of
``(1 - lam) f + lam D_f^eps`` for harmonic mappings ``f = h + conj(g)``
whose coefficients obey Bieberbach-type bounds, and cross-checks every
radius against extremal functions sampled on circles.
"""

from .exceptions import (
    AmbiguityError,
    DomainError,
    HarmonicRadiusError,
    HypothesisError,
    NoRootError,
    PoleError,
    PrecisionError,
)
from .extremal import (
    ExtremalKind,
    build_extremal,
    closed_form,
    jacobian_DF_closed_form,
    jacobian_F0_closed_form,
    jacobian_roots_scan,
)
from .families import (
    BoundFamily,
    CheckResult,
    FamilyKind,
    check_fully_convex_sum,
    check_fully_starlike_sum,
    check_k2_lambda,
    coefficient_bounds,
    satisfies_family,
)
from .mapping import (
    HarmonicMapping,
    SharpnessWarning,
    apply_differential,
    boundary_arg_derivative,
    boundary_tangent_arg_derivative,
    evaluate,
    jacobian,
    linear_operator,
    scale,
)
from .radius import (
    ProblemFamily,
    RadiusProblem,
    RootResult,
    closed_form_uniform_radius,
    radius_polynomial,
    solve_radius,
    sum_form_residual,
)
from . import coeff_file
from .series import CoeffSeq, power_sum, tail_bound, truncation_length

__version__ = "0.1.0"
