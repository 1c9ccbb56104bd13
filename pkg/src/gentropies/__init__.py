"""Generalized entropies with escort conditionals and deformed addition.

Core pieces: finite (ragged) probability distributions, the
lambda-deformed addition group, quasi-linear means over the two classified
generator families, the Shannon / Nath-Renyi / general-escort /
Havrda-Charvat-Tsallis entropy families with their composition laws, and a
seeded numerical harness that verifies the strong-additivity axioms and
reproduces the counterexamples that force the escort exponent to 1.
"""

from .checker import (
    PROBE_JOINT,
    VIOLATION_THRESHOLD,
    CheckConfig,
    CheckRecord,
    CheckReport,
    chain_residual,
    counterexample_probe,
    product_additivity_residual,
    refinement_consistency,
    run_suite,
    strong_additivity_residual,
    uniform_trace_residual,
)
from .deformed import Deformation
from .distributions import (
    Distribution,
    JointDistribution,
    conditional,
    direct_product,
    escort,
    flatten,
    make_distribution,
    make_joint,
    marginal,
    read_distributions,
    read_joint,
    refinement_joint,
    uniform,
    write_distribution,
    write_joint,
)
from .entropies import (
    HCT,
    EntropyFamily,
    GeneralEscort,
    Nath,
    Shannon,
    conditional_entropy,
    entropy,
    family_name,
    family_params,
    general_escort,
    havrda_charvat,
    hct,
    joint_entropy,
    make_family,
    nath,
    renyi,
    shannon,
    strongly_additive_nath,
    tsallis,
    uniform_trace,
)
from .errors import (
    ConfigError,
    DimensionError,
    DomainError,
    EscortUndefined,
    FormatError,
    GentropiesError,
    NegativeMass,
    NotNormalized,
    Overflow,
    ParameterError,
    SingularElement,
    ZeroMarginal,
)
from .generators import ExponentialGenerator, Generator, LinearGenerator, quasi_mean

__version__ = "0.1.0"

__all__ = [
    "CheckConfig",
    "CheckRecord",
    "CheckReport",
    "ConfigError",
    "Deformation",
    "DimensionError",
    "Distribution",
    "DomainError",
    "EntropyFamily",
    "EscortUndefined",
    "ExponentialGenerator",
    "FormatError",
    "GeneralEscort",
    "Generator",
    "GentropiesError",
    "HCT",
    "JointDistribution",
    "LinearGenerator",
    "Nath",
    "NegativeMass",
    "NotNormalized",
    "Overflow",
    "PROBE_JOINT",
    "ParameterError",
    "Shannon",
    "SingularElement",
    "VIOLATION_THRESHOLD",
    "ZeroMarginal",
    "chain_residual",
    "conditional",
    "conditional_entropy",
    "counterexample_probe",
    "direct_product",
    "entropy",
    "escort",
    "family_name",
    "family_params",
    "flatten",
    "general_escort",
    "havrda_charvat",
    "hct",
    "joint_entropy",
    "make_distribution",
    "make_family",
    "make_joint",
    "marginal",
    "nath",
    "product_additivity_residual",
    "quasi_mean",
    "read_distributions",
    "read_joint",
    "refinement_consistency",
    "refinement_joint",
    "renyi",
    "run_suite",
    "shannon",
    "strong_additivity_residual",
    "strongly_additive_nath",
    "tsallis",
    "uniform",
    "uniform_trace",
    "uniform_trace_residual",
    "write_distribution",
    "write_joint",
]
