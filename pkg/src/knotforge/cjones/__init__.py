"""Colored Jones polynomials of braid closures."""

from .braid import BraidWord
from .bracket import CrossingBudgetError, determinant, kauffman_bracket, kauffman_bracket_jones
from .catalog import CatalogEntry, CatalogError, load_catalog, lookup
from .rmatrix import braiding, gaussian_binomial
from .statesum import InterpolationError, colored_jones, colored_jones_exact
from .table import ColoredJonesTable, jones_table

__all__ = [
    "BraidWord",
    "CatalogEntry",
    "CatalogError",
    "ColoredJonesTable",
    "CrossingBudgetError",
    "InterpolationError",
    "braiding",
    "colored_jones",
    "colored_jones_exact",
    "determinant",
    "gaussian_binomial",
    "jones_table",
    "kauffman_bracket",
    "kauffman_bracket_jones",
    "load_catalog",
    "lookup",
]
