"""Longest arithmetic progressions in the least reduced residue system mod n."""

__version__ = "0.1.0"

from .arith import Factorization, Primorial, factorize, primorial_up_to
from .bounds import (
    BoundsReport,
    ThresholdRecord,
    bounds_report,
    guaranteed_threshold,
    lower_bound,
    minimal_threshold,
    upper_bound,
    verify_range,
)
from .errors import ConsistencyError, DomainError, ResourceError
from .rrs import (
    ApWitness,
    ResidueSystem,
    brute_force_f,
    exact_f,
    residue_system,
    validate_witness,
    witness_general,
)

__all__ = [
    "ApWitness",
    "BoundsReport",
    "ConsistencyError",
    "DomainError",
    "Factorization",
    "Primorial",
    "ResidueSystem",
    "ResourceError",
    "ThresholdRecord",
    "bounds_report",
    "brute_force_f",
    "exact_f",
    "factorize",
    "guaranteed_threshold",
    "lower_bound",
    "minimal_threshold",
    "primorial_up_to",
    "residue_system",
    "upper_bound",
    "validate_witness",
    "verify_range",
    "witness_general",
]
