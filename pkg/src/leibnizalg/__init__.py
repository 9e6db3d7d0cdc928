"""Exact computations for finite-dimensional Leibniz algebras over Q.

The package works with structure constants relative to a chosen basis and
keeps all arithmetic in fractions.Fraction. See the README for the file
format and the command line interface.
"""

from .linalg import (
    Fraction,
    Matrix,
    Subspace,
    frac,
    nullspace,
    rref,
    solve,
    subspace_contains,
    subspace_intersection,
    subspace_sum,
)
from .algebra import (
    BilinearTensor,
    LeibnizIdentityError,
    ModuleAction,
    StructureTensor,
    bracket,
    center,
    check_left_leibniz,
    hemisemidirect,
    is_lie,
    left_center,
    leibniz_kernel,
    opposite,
    quotient,
)
from .derivations import (
    CompletenessReport,
    derivation_space,
    inner_derivation_space,
    is_complete_def1,
    is_complete_def2,
    is_derivation,
    left_multiplication,
)
from .biderivations import (
    FactorizationResult,
    InfeasibilityCertificate,
    bider_from_map,
    biderivation_space,
    commuting_map_space,
    converse_def2_sym_skew,
    factor_left_modulo,
    factor_right_modulo,
    is_biderivation,
    left_biderivation_space,
    loday_biderivation_space,
    right_biderivation_space,
    skew_commuting_map_space,
    skew_part,
    symmetric_part,
    verify_prop_commuting,
    verify_sigma_theta,
)
from .fileformat import (
    FileFormatError,
    parse_algebra,
    parse_bilinear,
    serialize_algebra,
    serialize_bilinear,
)

__all__ = [
    "BilinearTensor",
    "CompletenessReport",
    "FactorizationResult",
    "FileFormatError",
    "Fraction",
    "InfeasibilityCertificate",
    "LeibnizIdentityError",
    "Matrix",
    "ModuleAction",
    "StructureTensor",
    "Subspace",
    "bider_from_map",
    "biderivation_space",
    "bracket",
    "center",
    "check_left_leibniz",
    "commuting_map_space",
    "converse_def2_sym_skew",
    "derivation_space",
    "factor_left_modulo",
    "factor_right_modulo",
    "frac",
    "hemisemidirect",
    "inner_derivation_space",
    "is_biderivation",
    "is_complete_def1",
    "is_complete_def2",
    "is_derivation",
    "is_lie",
    "left_biderivation_space",
    "left_center",
    "left_multiplication",
    "leibniz_kernel",
    "loday_biderivation_space",
    "nullspace",
    "opposite",
    "parse_algebra",
    "parse_bilinear",
    "quotient",
    "right_biderivation_space",
    "rref",
    "serialize_algebra",
    "serialize_bilinear",
    "skew_commuting_map_space",
    "skew_part",
    "solve",
    "subspace_contains",
    "subspace_intersection",
    "subspace_sum",
    "symmetric_part",
    "verify_prop_commuting",
    "verify_sigma_theta",
]

__version__ = "0.1.0"
