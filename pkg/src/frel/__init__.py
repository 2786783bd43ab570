"""Consistency, Chebyshev distance and consistent subsystems of max-T fuzzy relational equations."""
from .algebra import (
    DEFAULT_EPS,
    Consistency,
    System,
    TNormKind,
    check_consistency,
    greatest_potential_solution,
    max_t_product,
    min_residuum_product,
    residuum,
    shifted_bounds,
    t_apply,
)
from .chebyshev import (
    ApproximationError,
    ApproxResult,
    ChebyshevReport,
    apply_F,
    chebyshev_report,
    delta_ijk,
    delta_tensor,
    greatest_approximation,
    phi,
    sigma_g,
    sigma_gg,
    sigma_l,
)
from .oracle import OracleConfig, oracle_distance_bisection, oracle_enumerate, random_system
from .subsystems import (
    ConsistentFamily,
    McsCertificate,
    NoSolvableEquation,
    PreconditionError,
    UnsupportedTNorm,
    canonical_mcs,
    enumerate_consistent_maxmin,
    incremental_row_delta,
    maximal_consistent_maxmin,
    restrict,
    subsystem_distance,
)

__version__ = "0.1.0"
