"""Univariate Laurent polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .poly import Coeff, MultiPoly, normalize_coeff


class LaurentPoly:
    """Immutable ``{exponent: coefficient}`` map in one variable, exponents in Z."""

    __slots__ = ("var", "terms")

    def __init__(self, terms: Mapping[int, Coeff] = None, var: str = "t"):
        self.var = var
        self.terms: Dict[int, Coeff] = {
            int(e): normalize_coeff(c) for e, c in (terms or {}).items() if c
        }

    @classmethod
    def monomial(cls, e: int, c: Coeff = 1, var: str = "t") -> "LaurentPoly":
        return cls({e: c}, var)

    @classmethod
    def constant(cls, c: Coeff, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, Coeff]], var: str = "t") -> "LaurentPoly":
        out: Dict[int, Coeff] = {}
        for e, c in pairs:
            out[e] = out.get(e, 0) + c
        return cls(out, var)

    # queries ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def coefficient(self, e: int) -> Coeff:
        return self.terms.get(e, 0)

    def l1_norm(self):
        return sum(abs(c) for c in self.terms.values())

    def exponents_in_class(self, residue: int, modulus: int) -> bool:
        """True when every exponent is congruent to ``residue`` modulo ``modulus``."""
        return all((e - residue) % modulus == 0 for e in self.terms)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var and other.terms and self.terms:
                raise ValueError("Laurent polynomials in different variables")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly({e * k: Fraction(1) / Fraction(c) ** (-k)}, self.var)
        out = LaurentPoly({0: 1}, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var**k``."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``var -> 1/var``."""
        return LaurentPoly({-e: c for e, c in self.terms.items()}, self.var)

    def exquo(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in the Laurent ring; ``ValueError`` if not exact."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return LaurentPoly({}, self.var)
        a, sa = self.to_poly()
        b, sb = other.to_poly()
        q = a.exquo(b)
        return LaurentPoly.from_poly(q, self.var, sa - sb)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other}, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self.terms.items())

    # conversion ---------------------------------------------------------
    def to_poly(self) -> Tuple[MultiPoly, int]:
        """``(P, s)`` with ``self = var**s * P`` and ``P`` an ordinary polynomial."""
        if not self.terms:
            return MultiPoly({}, (self.var,)), 0
        s = self.min_exp()
        return MultiPoly({(e - s,): c for e, c in self.terms.items()}, (self.var,)), s

    @classmethod
    def from_poly(cls, p: MultiPoly, var: str = "t", shift: int = 0) -> "LaurentPoly":
        used = p.used_vars()
        if len(used) > 1 or (used and used[0] != var):
            raise ValueError("polynomial is not univariate in " + var)
        i = p.vars.index(var) if var in p.vars else None
        return cls({(e[i] if i is not None else 0) + shift: c for e, c in p.terms.items()}, var)

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self):
        return {
            "var": self.var,
            "terms": [[e, c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"]
                      for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({int(e): Fraction(c) if isinstance(c, str) else c for e, c in data["terms"]},
                   data.get("var", "t"))


def quantum_integer(n: int, var: str = "t") -> LaurentPoly:
    """``(t^{2n} - t^{-2n}) / (t^2 - t^{-2})``, the colored Jones value of the unknot."""
    sign = 1 if n >= 0 else -1
    n = abs(n)
    return LaurentPoly({2 * (n - 1 - 2 * i): sign for i in range(n)}, var)
