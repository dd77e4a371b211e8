"""Exact and numeric measurement of spectral submultiplicativity defects.

The package answers, for a group or semigroup of matrices, "how far can an
eigenvalue of a product stray from the products of eigenvalues?" — exactly
when the inputs live on rational angles, numerically otherwise — and builds
the families that sit at the known extremes.
"""

from .circle import (
    DEFAULT_ANGLE_TOL,
    ONE,
    RationalAngle,
    UnitPoint,
    arg_distance,
    chord_distance,
    nearest_root_of_unity,
    points_equal,
)
from .errors import (
    ClosureRefusedError,
    ConvergenceFailureError,
    DeterminantNotOneError,
    DimensionMismatchError,
    IncompleteClosureError,
    InvalidParamsError,
    NonUnitaryError,
    PrimeMismatchError,
    SpecmulError,
    ZeroSpectralRadiusError,
)
from .linalg import (
    BlockDiag,
    Dense,
    Diagonal,
    MonomialCycle,
    Spectrum,
    UMatrix,
    block_diag,
    eigensolve_dense,
    general_spectrum,
    identity_like,
    match_spectra,
    matmul,
    matrix_from_json,
    matrix_to_json,
    monomial_cycle,
    spectral_radius,
)
from .groups import (
    DEFAULT_BUDGET,
    GroupClosure,
    centre,
    close,
    closure_from_json,
    closure_to_json,
    is_irreducible,
    quotient_order_mod_centre,
)
from .constructions import (
    MillerMorenoParams,
    MmGapReport,
    QSetParams,
    QSetResult,
    SrElement,
    SrParams,
    TadpoleParams,
    adversarial_case4_pair,
    cycle_matrix,
    default_miller_moreno,
    is_prime,
    miller_moreno,
    mm_gap_analysis,
    primes_up_to,
    q_set,
    random_det1_diagonal,
    sample_tadpole,
    spectrum_dck,
    sr_pair_gamma,
    sr_ratio_bound,
    sr_sample,
    sr_sampler,
    tadpole,
    tadpole_case,
    tadpole_identity,
    tadpole_inverse,
    tadpole_mul,
    tadpole_sampler,
)
from .asm import (
    AsmReport,
    Histogram,
    PairDefect,
    conversion_check,
    measure_asm,
    measure_asm_sampled,
    measure_sub,
    pair_defect,
    pair_sub_defect,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ANGLE_TOL",
    "ONE",
    "RationalAngle",
    "UnitPoint",
    "arg_distance",
    "chord_distance",
    "nearest_root_of_unity",
    "points_equal",
    "SpecmulError",
    "DimensionMismatchError",
    "NonUnitaryError",
    "ConvergenceFailureError",
    "ClosureRefusedError",
    "IncompleteClosureError",
    "DeterminantNotOneError",
    "InvalidParamsError",
    "PrimeMismatchError",
    "ZeroSpectralRadiusError",
    "Spectrum",
    "UMatrix",
    "Diagonal",
    "MonomialCycle",
    "BlockDiag",
    "Dense",
    "monomial_cycle",
    "block_diag",
    "identity_like",
    "matmul",
    "eigensolve_dense",
    "general_spectrum",
    "spectral_radius",
    "match_spectra",
    "matrix_to_json",
    "matrix_from_json",
    "DEFAULT_BUDGET",
    "GroupClosure",
    "close",
    "centre",
    "quotient_order_mod_centre",
    "is_irreducible",
    "closure_to_json",
    "closure_from_json",
    "cycle_matrix",
    "spectrum_dck",
    "TadpoleParams",
    "tadpole",
    "tadpole_mul",
    "tadpole_identity",
    "tadpole_inverse",
    "tadpole_case",
    "random_det1_diagonal",
    "sample_tadpole",
    "adversarial_case4_pair",
    "tadpole_sampler",
    "MillerMorenoParams",
    "default_miller_moreno",
    "miller_moreno",
    "MmGapReport",
    "mm_gap_analysis",
    "SrParams",
    "SrElement",
    "sr_sample",
    "sr_sampler",
    "sr_pair_gamma",
    "sr_ratio_bound",
    "QSetParams",
    "QSetResult",
    "q_set",
    "is_prime",
    "primes_up_to",
    "AsmReport",
    "PairDefect",
    "Histogram",
    "pair_defect",
    "pair_sub_defect",
    "measure_asm",
    "measure_asm_sampled",
    "measure_sub",
    "conversion_check",
]
