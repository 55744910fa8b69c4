"""Exact-arithmetic feasibility checker for finite homogeneous geometry parameters."""

__version__ = "0.1.0"

from .exact_arith import (  # noqa: E402,F401
    UniPoly,
    Positivity,
    PositivityCertificate,
    eventually_positive,
    is_perfect_square,
    isqrt_floor,
)
from .parameters import (  # noqa: F401
    Condition,
    FlatProfile,
    ModelScopeError,
    ParamSystem,
    alpha_floor_check,
    classify_condition,
    growth_lower_bound,
    growth_step_holds,
    integrality_constraints,
    s2_from,
    s2_of,
)
from .bounds import (  # noqa: F401
    SpectralTriple,
    ThresholdReport,
    alpha_route_cap,
    alpha_route_sweep,
    beta_route_cap,
    beta_route_sweep,
    first_r_exceeding,
    phi_of,
    psi_of,
    theta_of,
)
from .localization import (  # noqa: F401
    CaseInstanceVerdict,
    CaseLabel,
    CaseRangeError,
    ExternalCaseError,
    LocalizedParams,
    eliminate_case_instance,
    localize_under,
    localized_alpha,
    obstruction_value,
    point_localize,
    s2_hat,
)
from .obstructions import (  # noqa: F401
    Impossibility,
    NoSquareCertificate,
    SquareObstruction,
    catalog,
    certify_no_square,
    factor_equation,
    sieve,
    sieve_naive,
    verify_identity,
)
from .geometries import (  # noqa: F401
    Geometry,
    GeometryKind,
    HomogeneityError,
    ModelMismatchError,
    PrimeField,
    UnsupportedFieldError,
    alpha_from_profile,
    alpha_of,
    build_affine,
    build_projective,
    check_closure_axioms,
    flat_profile,
    localize_at_point,
)
from .pipeline import (  # noqa: F401
    EliminationVerdict,
    Report,
    TransitionGraph,
    Verdict,
    eliminate,
    exceptional_min_dim,
    longest_condition_chain,
    normalize_disabled,
    required_dimension,
    search,
    standard_graph,
)
from .verify import verify_all  # noqa: F401
