"""One-sided Levy stable densities, the Levy integral transforms and their
Laplace-domain identities, with double-precision numerical oracles."""

from __future__ import annotations

from .density import (
    DensityEvaluator,
    RationalOrder,
    alpha_value,
    density,
    levy_smirnov,
    log_density,
    normalization,
    verify_defining_property,
)
from .errors import (
    AccuracyWarning,
    ConvergenceError,
    DomainError,
    IntegrationError,
    InversionError,
    LevyLaplaceError,
    SeriesOverflowError,
    UnsupportedError,
    VerificationError,
)
from .identities import (
    CorrelationParams,
    DeltaSequence,
    correlation_F,
    correlation_F_by_quadrature,
    delta_sequence,
    j_closed_case_a,
    j_closed_case_b,
    j_closed_case_c,
    j_integral,
    j_talbot,
    m_convolution_lhs,
    n_convolution_lhs,
    symmetry_residual,
)
from .kernels import KernelKind, KernelSpec, m_kernel, n_kernel
from .laplace import TalbotConfig, complex_power, forward_laplace, talbot_inverse
from .quadrature import QuadratureConfig, gauss_kronrod, integrate_positive_axis
from .report import VerificationReport
from .special import PFqParams, bessel_k, gamma, hyp_pfq, loggamma
from .transforms import (
    CATALOG,
    Growth,
    LaplacePair,
    Variant,
    bar_transform,
    get_pair,
    tilde_transform,
    verify_theorem1,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "CATALOG",
    "ConvergenceError",
    "CorrelationParams",
    "DeltaSequence",
    "DensityEvaluator",
    "DomainError",
    "Growth",
    "IntegrationError",
    "InversionError",
    "KernelKind",
    "KernelSpec",
    "LaplacePair",
    "LevyLaplaceError",
    "PFqParams",
    "QuadratureConfig",
    "RationalOrder",
    "SeriesOverflowError",
    "TalbotConfig",
    "UnsupportedError",
    "Variant",
    "VerificationError",
    "VerificationReport",
    "alpha_value",
    "bar_transform",
    "bessel_k",
    "complex_power",
    "correlation_F",
    "correlation_F_by_quadrature",
    "delta_sequence",
    "density",
    "forward_laplace",
    "gamma",
    "gauss_kronrod",
    "get_pair",
    "hyp_pfq",
    "integrate_positive_axis",
    "j_closed_case_a",
    "j_closed_case_b",
    "j_closed_case_c",
    "j_integral",
    "j_talbot",
    "levy_smirnov",
    "log_density",
    "loggamma",
    "m_convolution_lhs",
    "m_kernel",
    "n_convolution_lhs",
    "n_kernel",
    "normalization",
    "symmetry_residual",
    "talbot_inverse",
    "tilde_transform",
    "verify_defining_property",
    "verify_theorem1",
]
