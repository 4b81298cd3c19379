"""Numerical range, generalized numerical radius, and certified inequality
checks for sectorial matrices."""

from .generator import (
    GenConfig,
    mix_seed,
    random_accretive_dissipative,
    random_ginibre,
    random_pd,
    random_sectorial,
    random_unitary,
)
from .harness import (
    CheckContext,
    DEFAULT_CONTEXT,
    DEFAULT_DIMS,
    DEFAULT_NORMS,
    InequalityId,
    all_ids,
    check_inequality,
    explain,
    run_suite,
    tightness_scan,
)
from .linalg import (
    DimensionError,
    DomainError,
    HermEigResult,
    block2x2,
    cartesian_decompose,
    hadamard,
    herm_eig,
    is_psd,
    matrix_from_obj,
    matrix_to_obj,
    read_matrix,
    singular_values,
    write_matrix,
)
from .norms import (
    FROBENIUS,
    OPERATOR,
    TRACE,
    NormSpec,
    evaluate_norm,
    hermitian_norm,
    parse_norm,
    schatten,
    verify_norm_axioms,
)
from .radius import (
    RadiusEstimate,
    RangePoint,
    numerical_range_boundary,
    omega,
    omega_n,
    radius_profile,
)
from .report import CheckResult, Interval, SuiteReport
from .sectorial import (
    NotSectorialError,
    SectorInfo,
    rotation_to_sector,
    sec_block,
    sector_index,
    tan_block,
)

__version__ = "0.1.0"

__all__ = [
    "GenConfig",
    "mix_seed",
    "random_accretive_dissipative",
    "random_ginibre",
    "random_pd",
    "random_sectorial",
    "random_unitary",
    "CheckContext",
    "DEFAULT_CONTEXT",
    "DEFAULT_DIMS",
    "DEFAULT_NORMS",
    "InequalityId",
    "all_ids",
    "check_inequality",
    "explain",
    "run_suite",
    "tightness_scan",
    "DimensionError",
    "DomainError",
    "HermEigResult",
    "block2x2",
    "cartesian_decompose",
    "hadamard",
    "herm_eig",
    "is_psd",
    "matrix_from_obj",
    "matrix_to_obj",
    "read_matrix",
    "singular_values",
    "write_matrix",
    "FROBENIUS",
    "OPERATOR",
    "TRACE",
    "NormSpec",
    "evaluate_norm",
    "hermitian_norm",
    "parse_norm",
    "schatten",
    "verify_norm_axioms",
    "RadiusEstimate",
    "RangePoint",
    "numerical_range_boundary",
    "omega",
    "omega_n",
    "radius_profile",
    "CheckResult",
    "Interval",
    "SuiteReport",
    "NotSectorialError",
    "SectorInfo",
    "rotation_to_sector",
    "sec_block",
    "sector_index",
    "tan_block",
    "__version__",
]
