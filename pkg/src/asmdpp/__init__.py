"""Exact combinatorics of alternating sign matrices and descending plane
partitions: enumeration, statistics, six-vertex and lattice-path
bijections, determinant formulas over an exact polynomial ring, and a
verification suite that checks every identity at desk scale.
"""

from .asm import Asm, AsmStats, asm_stats, enumerate_asms, z_asm_brute
from .dpp import Dpp, DppStats, dpp_stats, enumerate_dpps, z_dpp_brute
from .errors import (
    AsmDppError,
    DegenerateParameterError,
    InvariantError,
    ResourceLimitError,
    ValidationError,
)
from .linalg import PolyMatrix, det_poly, det_rat
from .matrices import build, genfunc_det
from .polynomial import MultiPoly, OmegaPoly, poly_str

__version__ = "0.1.0"

__all__ = [
    "Asm",
    "AsmStats",
    "AsmDppError",
    "DegenerateParameterError",
    "Dpp",
    "DppStats",
    "InvariantError",
    "MultiPoly",
    "OmegaPoly",
    "PolyMatrix",
    "ResourceLimitError",
    "ValidationError",
    "asm_stats",
    "build",
    "det_poly",
    "det_rat",
    "dpp_stats",
    "enumerate_asms",
    "enumerate_dpps",
    "genfunc_det",
    "poly_str",
    "z_asm_brute",
    "z_dpp_brute",
    "__version__",
]
