"""Seminormal representations of Weyl groups and Iwahori-Hecke algebras of types A, B, D, G2.

All arithmetic is exact: matrix entries are rationals (Weyl groups) or
canonical rational functions in ``p`` and ``q`` (Hecke algebras).
"""

from .exact import LaurentPoly, ParseError, PoleError, RatFunc, rf_eval, rf_format, rf_parse
from .groups import GroupAlgebraElement, SignedPermutation, central_sum, jm_element
from .hecke import HeckeRep, build_hecke, central_matrix, murphy_matrix, specialize_rep
from .tableaux import DLabel, Shape, StandardTableau, enum_shapes, enum_standard_tableaux
from .verify import CheckReport, run_suite
from .weyl import SeminormalRep, apply_group_algebra, build_rep, character

__version__ = "0.1.0"
