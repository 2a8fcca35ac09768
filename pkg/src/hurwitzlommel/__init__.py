"""
hurwitzlommel - Hurwitz zeta, Lommel and Mellin-Barnes functions with an identity verifier

Code is organized in layers
- kernels/ holds the elementary complex special functions and quadrature
- zeta/, lommel/ and mellin/ build the functions and series on top of them
- verify/ turns each identity into a parameterized check with a report
- config/ locates tolerance profiles; cli.py is the command-line front door
"""

# Layer 1: Controls and errors
from hurwitzlommel.controls import (
    Acceleration,
    QuadratureScheme,
    Route,
    SeriesControl,
    QuadratureSpec,
    ContourSpec,
    EvalRoute,
)
from hurwitzlommel.errors import (
    HurwitzLommelError,
    ConfigurationError,
    DomainError,
    PoleError,
    BranchError,
    DegenerateOrder,
    NoConvergence,
    CancellationError,
    QuadratureFailure,
    ContourError,
    TailBoundExceeded,
    DoublePoleProximity,
    NumericalOverflow,
    SkipCase,
)

# Layer 2: Kernels
from hurwitzlommel.kernels import (
    gamma,
    log_gamma,
    hyp1f2,
    bessel_j,
    bessel_y,
    sigma_divisor,
    polylog_sum,
)

# Layer 3: Functions
from hurwitzlommel.zeta import (
    riemann_zeta,
    hurwitz_zeta_em,
    hurwitz_zeta_hermite,
    hurwitz_rhs_fourier,
    phi,
    xi_completed,
    xi_capital,
)
from hurwitzlommel.lommel import (
    LommelOrder,
    lommel_s_small,
    lommel_s,
    lommel_S,
    lommel_S_special,
    lommel_C,
    contiguous_step,
    masirevic_sum,
    masirevic_sum2,
    lommel_dirichlet_sum,
)
from hurwitzlommel.mellin import (
    i_s_line,
    i_s_residue,
    i_s_closed,
    LemmaIntegralParams,
    lemma_lhs_integral,
    mellin_pair_check,
)

# Layer 4: Verification
from hurwitzlommel.config import load_tolerance_profile, list_profiles
from hurwitzlommel.verify import (
    IdentityId,
    IdentityCase,
    Status,
    VerificationReport,
    SuiteResult,
    run_suite,
    default_cases,
)

__version__ = "0.1.0"
__all__ = [
    # Layer 1: Controls & errors
    "Acceleration",
    "QuadratureScheme",
    "Route",
    "SeriesControl",
    "QuadratureSpec",
    "ContourSpec",
    "EvalRoute",
    "HurwitzLommelError",
    "ConfigurationError",
    "DomainError",
    "PoleError",
    "BranchError",
    "DegenerateOrder",
    "NoConvergence",
    "CancellationError",
    "QuadratureFailure",
    "ContourError",
    "TailBoundExceeded",
    "DoublePoleProximity",
    "NumericalOverflow",
    "SkipCase",
    # Layer 2: Kernels
    "gamma",
    "log_gamma",
    "hyp1f2",
    "bessel_j",
    "bessel_y",
    "sigma_divisor",
    "polylog_sum",
    # Layer 3: Zeta
    "riemann_zeta",
    "hurwitz_zeta_em",
    "hurwitz_zeta_hermite",
    "hurwitz_rhs_fourier",
    "phi",
    "xi_completed",
    "xi_capital",
    # Layer 3: Lommel
    "LommelOrder",
    "lommel_s_small",
    "lommel_s",
    "lommel_S",
    "lommel_S_special",
    "lommel_C",
    "contiguous_step",
    "masirevic_sum",
    "masirevic_sum2",
    "lommel_dirichlet_sum",
    # Layer 3: Mellin-Barnes
    "i_s_line",
    "i_s_residue",
    "i_s_closed",
    "LemmaIntegralParams",
    "lemma_lhs_integral",
    "mellin_pair_check",
    # Layer 4: Verification
    "load_tolerance_profile",
    "list_profiles",
    "IdentityId",
    "IdentityCase",
    "Status",
    "VerificationReport",
    "SuiteResult",
    "run_suite",
    "default_cases",
]
