"""Rotation numbers of cyclic sequences of primitive lattice vectors.

The main entry points are :func:`validate_loop`, :func:`analyze_loop`,
:func:`refine_loop` and :func:`rotation_formula`; :func:`winding_number_exact`
computes the same number directly from the polygon.
"""

from .contfrac import (
    HJExpansion,
    RegExpansion,
    hj_eval,
    hj_expand,
    hj_matrix_product,
    mod_inverse,
    regular_eval,
    regular_expand,
    regular_matrix_product,
)
from .lattice import LatticeVector, Mat2, det2, ext_gcd, gcd, is_primitive, mat_det, mat_inv_unimodular, mat_mul
from .loop import (
    EdgeAnalysis,
    InvalidLoopError,
    LoopTooShortError,
    NonPrimitiveVertexError,
    VectorLoop,
    ZeroDeterminantError,
    analyze_loop,
    compute_a,
    edge_normalization,
    validate_loop,
)
from .refine import UnimodularRefinement, refine_edge, refine_loop
from .rotation import (
    RotationReport,
    hm_rotation,
    rotation_formula,
    rotation_report,
    winding_number_exact,
    winding_number_float,
)

__version__ = "0.1.0"
