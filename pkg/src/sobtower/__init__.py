"""Sobolev towers for diagonal multiplication semigroups on weighted l2
sequence spaces, with universal extrapolation and interpolation limits."""

from .errors import (
    ConfigError,
    ContractViolation,
    InvalidRescaling,
    InvalidSequence,
    InvalidSpectrum,
    NormNotCertified,
    NotInDomain,
    NotRepresentable,
    SobtowerError,
    SupportOutOfRange,
    UnsupportedCombination,
)
from .spaces import (
    ClosedForm,
    ExplicitKotheMatrix,
    ExplicitSpectrum,
    FiniteSupport,
    NormResult,
    NormStatus,
    PowerLawSpectrum,
    Sequence,
    ShiftedSpectrum,
    SpectralImage,
    SpectralKotheMatrix,
    Spectrum,
    TowerWeight,
    c0_seminorm,
    geom_decay,
    neumaier_sum,
    power_law,
    tower_weight,
    unit_vector,
    weighted_l2_norm,
    zero_vector,
)
from .semigroup import DiagonalSemigroup, OrbitSample
from .tower import (
    EquicontinuityReport,
    MembershipEvidence,
    MembershipStatus,
    MembershipVerdict,
    RatioRange,
    SimilarityResult,
    equicontinuity_constants,
    graph_norm,
    membership_level,
    rescaled_tower_compare,
    similarity_check,
    tower_norm,
)
from .limits import (
    ExtrapolationElement,
    InterpolationElement,
    extrapolation_embed,
    interpolation_embed,
    interpolation_membership,
    interpolation_seminorm,
    limit_generator_apply,
    limit_generator_inverse_apply,
    limit_semigroup_apply,
)
from .verify import (
    CheckResult,
    CheckSpec,
    CheckStatus,
    InvariantReport,
    brute_force_membership,
    convergence_order,
    default_check_spec,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "SobtowerError",
    "InvalidSequence",
    "InvalidSpectrum",
    "InvalidRescaling",
    "ContractViolation",
    "UnsupportedCombination",
    "SupportOutOfRange",
    "NotInDomain",
    "NotRepresentable",
    "NormNotCertified",
    "ConfigError",
    "FiniteSupport",
    "ClosedForm",
    "SpectralImage",
    "Sequence",
    "unit_vector",
    "zero_vector",
    "power_law",
    "geom_decay",
    "Spectrum",
    "ExplicitSpectrum",
    "PowerLawSpectrum",
    "ShiftedSpectrum",
    "TowerWeight",
    "tower_weight",
    "SpectralKotheMatrix",
    "ExplicitKotheMatrix",
    "NormStatus",
    "NormResult",
    "neumaier_sum",
    "weighted_l2_norm",
    "c0_seminorm",
    "DiagonalSemigroup",
    "OrbitSample",
    "MembershipStatus",
    "MembershipEvidence",
    "MembershipVerdict",
    "tower_norm",
    "graph_norm",
    "membership_level",
    "similarity_check",
    "SimilarityResult",
    "equicontinuity_constants",
    "EquicontinuityReport",
    "rescaled_tower_compare",
    "RatioRange",
    "InterpolationElement",
    "ExtrapolationElement",
    "interpolation_seminorm",
    "interpolation_membership",
    "interpolation_embed",
    "extrapolation_embed",
    "limit_semigroup_apply",
    "limit_generator_apply",
    "limit_generator_inverse_apply",
    "CheckSpec",
    "CheckStatus",
    "CheckResult",
    "InvariantReport",
    "default_check_spec",
    "run_suite",
    "brute_force_membership",
    "convergence_order",
]
