"""Exact polynomial arithmetic over the rationals."""

from .polynomial import Polynomial, arith, polynomial_from_terms, term_order_key
from .resultants import discriminant, pseudo_remainder, resultant, sylvester_matrix
from .factorization import (
    canonical,
    content_in,
    gcd,
    gcd_univariate,
    normalize,
    primitive_in,
    sorted_polys,
    squarefree_factors,
)

__all__ = [
    "Polynomial",
    "arith",
    "canonical",
    "content_in",
    "discriminant",
    "gcd",
    "gcd_univariate",
    "normalize",
    "polynomial_from_terms",
    "primitive_in",
    "pseudo_remainder",
    "resultant",
    "sorted_polys",
    "squarefree_factors",
    "sylvester_matrix",
    "term_order_key",
]
