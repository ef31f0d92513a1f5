"""Exact summability and telescoper-existence decisions for rational
functions of three discrete variables."""

from .ore import (ExponentSeparation, OreMatrix, OrePoly, circulant_matrix,
                  diagonalize_circulant, exponent_separation, lclm)
from .parsing import (ParseError, format_operator, format_poly, format_ratfunc,
                      parse_expr, parse_expr_prefactored, parse_operator, parse_poly)
from .partfrac import PFTerm, partial_fractions
from .polys import (Factorization, MultiPoly, ShiftVector, factor,
                    integer_linear_test, shift_apply)
from .rational import RatFunc, delta, telescoping_sum
from .shift_equiv import StabilizerLattice, find_shift, stabilizer_lattice
from .summability import (AdditiveDecomposition, SimpleFraction, SummabilityResult,
                          additive_decomposition, check_certificate, is_summable,
                          solve_shift_difference)
from .telescoper import (ConstructionResult, OrbitForm, OrbitGroup, OrbitTerm,
                         TelescoperDecision, construct_telescoper,
                         exists_telescoper, to_orbit_form, verify)

__version__ = "0.1.0"

__all__ = [
    "AdditiveDecomposition", "ConstructionResult", "ExponentSeparation",
    "Factorization", "MultiPoly", "OrbitForm", "OrbitGroup", "OrbitTerm",
    "OreMatrix", "OrePoly", "ParseError", "PFTerm", "RatFunc", "ShiftVector",
    "SimpleFraction", "StabilizerLattice", "SummabilityResult",
    "TelescoperDecision", "additive_decomposition", "check_certificate",
    "circulant_matrix", "construct_telescoper", "delta",
    "diagonalize_circulant", "exists_telescoper", "exponent_separation",
    "factor", "find_shift", "format_operator", "format_poly", "format_ratfunc",
    "integer_linear_test", "is_summable", "lclm", "parse_expr",
    "parse_expr_prefactored", "parse_operator", "parse_poly",
    "partial_fractions", "shift_apply", "solve_shift_difference",
    "stabilizer_lattice", "telescoping_sum", "to_orbit_form", "verify",
]
