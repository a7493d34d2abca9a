"""Leaf functions and the exact periodic solutions of the free Duffing equation built from them."""

from .duffing import (
    DuffingCoefficients,
    SolutionType,
    StateSample,
    WaveMetadata,
    WaveParams,
    coefficients,
    evaluate,
    first_derivative,
    initial_conditions,
    metadata,
    residual,
    sample_wave,
    second_derivative,
)
from .exceptions import ConvergenceError, InvalidParamsError, LeafDomainError, LeafwaveError
from .leafcore import (
    arccleaf,
    arcsleaf,
    cleaf,
    cleaf_derivative,
    integral_cleaf2,
    integral_sleaf2,
    leaf_identity_residual,
    period_constant,
    sleaf,
    sleaf_derivative,
)

__version__ = "0.1.0"

__all__ = [
    "DuffingCoefficients",
    "SolutionType",
    "StateSample",
    "WaveMetadata",
    "WaveParams",
    "coefficients",
    "evaluate",
    "first_derivative",
    "initial_conditions",
    "metadata",
    "residual",
    "sample_wave",
    "second_derivative",
    "ConvergenceError",
    "InvalidParamsError",
    "LeafDomainError",
    "LeafwaveError",
    "arccleaf",
    "arcsleaf",
    "cleaf",
    "cleaf_derivative",
    "integral_cleaf2",
    "integral_sleaf2",
    "leaf_identity_residual",
    "period_constant",
    "sleaf",
    "sleaf_derivative",
]
