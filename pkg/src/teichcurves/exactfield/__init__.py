"""Exact coefficient fields, polynomials and linear algebra."""

from .fields import (QQ, Field, FpElement, PrimeField, QuadElement, QuadraticField, Rational,
                     RationalField, format_rational, is_square, parse_rational, rational_sqrt)
from .linalg import Matrix, bareiss_det, nullspace, solve_linear
from .multipoly import MultiPoly
from .poly import UniPoly, discriminant, interpolate, poly_gcd, poly_invmod, resultant
from .ratfunc import RationalFunction, RationalFunctionField

__all__ = [
    "QQ", "Field", "FpElement", "PrimeField", "QuadElement", "QuadraticField", "Rational",
    "RationalField", "format_rational", "is_square", "parse_rational", "rational_sqrt",
    "Matrix", "bareiss_det", "nullspace", "solve_linear", "MultiPoly", "UniPoly",
    "discriminant", "interpolate", "poly_gcd", "poly_invmod", "resultant",
    "RationalFunction", "RationalFunctionField",
]
