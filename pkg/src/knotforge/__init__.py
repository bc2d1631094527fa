"""Exact tools for 2-bridge knots: Riley and A-polynomials, colored Jones
polynomials and their recurrences, and the AJ comparison between them."""

__version__ = "0.1.0"
