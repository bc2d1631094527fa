"""Exact polynomial arithmetic over Z and Q."""

from .factor import factor_biv_Q, factor_uni_Q
from .gcd import content_in, integer_content, is_squarefree, poly_gcd, squarefree_part
from .laurent import LaurentPoly, quantum_integer
from .poly import MultiPoly
from .resultant import resultant

__all__ = [
    "LaurentPoly",
    "MultiPoly",
    "content_in",
    "factor_biv_Q",
    "factor_uni_Q",
    "integer_content",
    "is_squarefree",
    "poly_gcd",
    "quantum_integer",
    "resultant",
    "squarefree_part",
]
