"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are Python ints whenever they are integral and
:class:`fractions.Fraction` otherwise, so integer-only computations never pay
for rational arithmetic.  Variables are kept sorted by a fixed global order
(``t < M < m < L < l < s < u``, unknown names afterwards alphabetically) and
terms are compared in graded-lex order with the *largest* variable compared
first after total degree.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Mapping, Tuple, Union

VARIABLE_ORDER = ("t", "M", "m", "L", "l", "s", "u")

Coeff = Union[int, Fraction]
Exps = Tuple[int, ...]


def normalize_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, _RationalABC):
        return normalize_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"non-rational coefficient {c!r}")


def _var_key(name: str):
    try:
        return (0, VARIABLE_ORDER.index(name), "")
    except ValueError:
        return (1, 0, name)


def sort_vars(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


def monomial_key(exps: Exps):
    """Graded-lex sort key; larger key means larger monomial."""
    return (sum(exps), tuple(reversed(exps)))


class MultiPoly:
    """Immutable sparse polynomial ``{exponent tuple: coefficient}``."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Coeff] = None, vars: Iterable[str] = ()):
        vars = tuple(vars)
        if list(vars) != list(sort_vars(vars)):
            order = sort_vars(vars)
            perm = [vars.index(v) for v in order]
            terms = {tuple(e[i] for i in perm): c for e, c in (terms or {}).items()}
            vars = order
        clean: Dict[Exps, Coeff] = {}
        for e, c in (terms or {}).items():
            if len(e) != len(vars):
                raise ValueError("exponent vector length does not match variables")
            if c:
                clean[tuple(e)] = normalize_coeff(c)
        self.vars = vars
        self.terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def constant(cls, c, vars: Iterable[str] = ()) -> "MultiPoly":
        vars = sort_vars(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({(1,): 1}, (name,))

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Parse an expression such as ``"3*x^2*y - y/2 + 1"``."""
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        return _eval_ast(tree.body)

    @classmethod
    def from_univariate(cls, coeffs, var: str) -> "MultiPoly":
        """Build from a dense coefficient list, lowest degree first."""
        return cls({(i,): c for i, c in enumerate(coeffs)}, (var,))

    # basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def nterms(self) -> int:
        return len(self.terms)

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            return -1

    def degree(self, var: str = None) -> int:
        """Degree in ``var`` (total degree if omitted); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._index(var)
        if i < 0:
            return 0
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self._index(var)
        if i < 0:
            return 0
        return min(e[i] for e in self.terms)

    def used_vars(self) -> Tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def compact(self) -> "MultiPoly":
        """Drop variables that do not occur."""
        keep = [i for i, _ in enumerate(self.vars) if any(e[i] for e in self.terms)]
        if len(keep) == len(self.vars):
            return self
        return MultiPoly({tuple(e[i] for i in keep): c for e, c in self.terms.items()},
                         tuple(self.vars[i] for i in keep))

    def with_vars(self, vars: Iterable[str]) -> "MultiPoly":
        """Re-express over a superset of the current variables."""
        vars = sort_vars(vars)
        if vars == self.vars:
            return self
        pos = []
        for v in self.vars:
            if v not in vars:
                if any(e[self.vars.index(v)] for e in self.terms):
                    raise ValueError(f"variable {v} in use")
            pos.append(vars.index(v) if v in vars else -1)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for k, j in enumerate(pos):
                if j >= 0:
                    ne[j] = e[k]
            out[tuple(ne)] = c
        return MultiPoly(out, vars)

    def leading_exps(self) -> Exps:
        return max(self.terms, key=monomial_key)

    def leading_coeff(self) -> Coeff:
        if not self.terms:
            return 0
        return self.terms[self.leading_exps()]

    def coefficients_in(self, var: str) -> Dict[int, "MultiPoly"]:
        """Map ``k -> coefficient of var**k`` (coefficients keep the same variables)."""
        i = self._index(var)
        out: Dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i] if i >= 0 else 0
            ne = e[:i] + (0,) + e[i + 1:] if i >= 0 else e
            out.setdefault(k, {})[ne] = c
        return {k: MultiPoly(t, self.vars) for k, t in out.items()}

    def coeff(self, var: str, k: int) -> "MultiPoly":
        return self.coefficients_in(var).get(k, MultiPoly({}, self.vars))

    def lc_in(self, var: str) -> "MultiPoly":
        return self.coeff(var, self.degree(var))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.vars)
        return NotImplemented

    @staticmethod
    def _align(a: "MultiPoly", b: "MultiPoly"):
        if a.vars == b.vars:
            return a, b
        vars = sort_vars(a.vars + b.vars)
        return a.with_vars(vars), b.with_vars(vars)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(self, other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out, a.vars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.vars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(self, other)
        out: Dict[Exps, Coeff] = {}
        bt = list(b.terms.items())
        n = len(a.vars)
        if n == 1:
            for (e1,), c1 in a.terms.items():
                for (e2,), c2 in bt:
                    k = (e1 + e2,)
                    out[k] = out.get(k, 0) + c1 * c2
        elif n == 2:
            for (x1, y1), c1 in a.terms.items():
                for (x2, y2), c2 in bt:
                    k = (x1 + x2, y1 + y2)
                    out[k] = out.get(k, 0) + c1 * c2
        else:
            for e1, c1 in a.terms.items():
                for e2, c2 in bt:
                    k = tuple(x + y for x, y in zip(e1, e2))
                    out[k] = out.get(k, 0) + c1 * c2
        return MultiPoly(out, a.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "MultiPoly":
        return self * normalize_coeff(c)

    def shift(self, var: str, k: int) -> "MultiPoly":
        """Multiply by ``var**k``; ``k`` may be negative if the result stays polynomial."""
        p = self.with_vars(self.vars + (var,))
        i = p.vars.index(var)
        out = {}
        for e, c in p.terms.items():
            if e[i] + k < 0:
                raise ValueError("shift would create a negative exponent")
            out[e[:i] + (e[i] + k,) + e[i + 1:]] = c
        return MultiPoly(out, p.vars)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        return self.compact()._canon() == other.compact()._canon()

    def _canon(self):
        return (self.vars, frozenset(self.terms.items()))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.compact()._canon())
        return self._hash

    # calculus / substitution ---------------------------------------------
    def diff(self, var: str) -> "MultiPoly":
        i = self._index(var)
        if i < 0:
            return MultiPoly({}, self.vars)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly(out, self.vars)

    def subs(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Substitute rationals or polynomials for variables."""
        mapping = {k: v for k, v in mapping.items() if k in self.vars}
        if not mapping:
            return self
        keep = [v for v in self.vars if v not in mapping]
        images = {}
        for k, v in mapping.items():
            images[k] = v if isinstance(v, MultiPoly) else MultiPoly.constant(normalize_coeff(v))
        allvars = sort_vars(keep + [w for img in images.values() for w in img.vars])
        idx_keep = [(self.vars.index(v), allvars.index(v)) for v in keep]
        idx_sub = [(self.vars.index(k), images[k].with_vars(allvars)) for k in mapping]
        powcache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(j: int, img: MultiPoly, k: int) -> MultiPoly:
            key = (j, k)
            if key not in powcache:
                powcache[key] = img ** k
            return powcache[key]

        result: Dict[Exps, Coeff] = {}
        groups: Dict[Tuple[int, ...], Dict[Exps, Coeff]] = {}
        for e, c in self.terms.items():
            sub_e = tuple(e[j] for j, _ in idx_sub)
            ne = [0] * len(allvars)
            for j, t in idx_keep:
                ne[t] = e[j]
            g = groups.setdefault(sub_e, {})
            g[tuple(ne)] = g.get(tuple(ne), 0) + c
        for sub_e, part in groups.items():
            factor = MultiPoly.constant(1, allvars)
            for (j, img), k in zip(idx_sub, sub_e):
                if k:
                    factor = factor * power(j, img, k)
            prod = MultiPoly(part, allvars) * factor
            for e, c in prod.terms.items():
                result[e] = result.get(e, 0) + c
        return MultiPoly(result, allvars)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at numeric values (any ring supporting ``+``, ``*``, ``**``)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * values[v] ** k
            total = total + term
        return total

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return MultiPoly(self.terms, tuple(mapping.get(v, v) for v in self.vars))

    # content ------------------------------------------------------------
    def integer_content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` integral with coprime coefficients."""
        if not self.terms:
            raise ValueError("content of zero polynomial")
        nums = [Fraction(c).numerator for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        g = reduce(gcd, nums)
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens)
        return Fraction(abs(g), lcm)

    def content_primitive(self) -> Tuple[Coeff, "MultiPoly"]:
        """Split as ``content * primitive`` with positive graded-lex leading coefficient."""
        c = self.integer_content()
        if self.leading_coeff() < 0:
            c = -c
        prim = MultiPoly({e: normalize_coeff(v / c) for e, v in self.terms.items()}, self.vars)
        return normalize_coeff(c), prim

    def primitive(self) -> "MultiPoly":
        return self.content_primitive()[1]

    def monic(self) -> "MultiPoly":
        lc = self.leading_coeff()
        return MultiPoly({e: Fraction(c) / lc for e, c in self.terms.items()}, self.vars)

    # division -----------------------------------------------------------
    def divmod_multi(self, divisor: "MultiPoly"):
        """Division with remainder w.r.t. the graded-lex order."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a, d = self._align(self, divisor)
        vars = a.vars
        lt = d.leading_exps()
        lcd = d.terms[lt]
        rem = dict(a.terms)
        quo: Dict[Exps, Coeff] = {}
        out_rem: Dict[Exps, Coeff] = {}
        dterms = list(d.terms.items())
        while rem:
            e = max(rem, key=monomial_key)
            c = rem[e]
            if all(x >= y for x, y in zip(e, lt)):
                qe = tuple(x - y for x, y in zip(e, lt))
                qc = normalize_coeff(Fraction(c) / lcd) if not isinstance(c, int) or c % lcd else c // lcd
                quo[qe] = quo.get(qe, 0) + qc
                for de, dc in dterms:
                    k = tuple(x + y for x, y in zip(qe, de))
                    v = rem.get(k, 0) - qc * dc
                    if v:
                        rem[k] = v
                    else:
                        rem.pop(k, None)
            else:
                out_rem[e] = c
                del rem[e]
        return MultiPoly(quo, vars), MultiPoly(out_rem, vars)

    def exquo(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises ``ValueError`` when the division leaves a remainder."""
        q, r = self.divmod_multi(divisor)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other: "MultiPoly") -> bool:
        return not other.divmod_multi(self)[1]

    def pseudo_divmod(self, divisor: "MultiPoly", var: str):
        """``lc(divisor)^k * self = q * divisor + r`` with ``deg_var r < deg_var divisor``."""
        a, d = self._align(self, divisor)
        dn = d.degree(var)
        if dn < 0:
            raise ZeroDivisionError("pseudo-division by zero")
        lcd = d.lc_in(var)
        r = a
        q = MultiPoly({}, a.vars)
        e = max(a.degree(var) - dn + 1, 0)
        while r and r.degree(var) >= dn:
            rn = r.degree(var)
            s = r.coeff(var, rn).shift(var, rn - dn)
            q = q * lcd + s
            r = r * lcd - s * d
            e -= 1
        if e:
            f = lcd ** e
            q, r = q * f, r * f
        return q, r

    def pseudo_rem(self, divisor: "MultiPoly", var: str) -> "MultiPoly":
        return self.pseudo_divmod(divisor, var)[1]

    # display ------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def to_json(self):
        """``{"vars": [...], "terms": [[exps, coeff], ...]}``; rationals as ``"p/q"`` strings."""
        return {
            "vars": list(self.vars),
            "terms": [[list(e), c if isinstance(c, int) else str(c)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        terms = {}
        for e, c in data["terms"]:
            terms[tuple(e)] = Fraction(c) if isinstance(c, str) else c
        return cls(terms, data["vars"])


def _eval_ast(node) -> MultiPoly:
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left)
        if isinstance(node.op, ast.Pow):
            if not isinstance(node.right, ast.Constant) or not isinstance(node.right.value, int):
                raise ValueError("exponents must be integer literals")
            return left ** node.right.value
        right = _eval_ast(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant():
                raise ValueError("can only divide by constants")
            return left * (Fraction(1) / Fraction(right.constant_value()))
        raise ValueError(f"unsupported operator {node.op}")
    if isinstance(node, ast.UnaryOp):
        val = _eval_ast(node.operand)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return MultiPoly.constant(node.value)
    if isinstance(node, ast.Name):
        return MultiPoly.var(node.id)
    raise ValueError(f"cannot parse polynomial fragment {ast.dump(node)}")


def P(text: str) -> MultiPoly:
    """Shorthand for :meth:`MultiPoly.parse`."""
    return MultiPoly.parse(text)
