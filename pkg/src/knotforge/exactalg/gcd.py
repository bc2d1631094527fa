"""GCD, content and squarefree parts of multivariate polynomials over Q.

Everything is computed recursively with primitive pseudo-remainder sequences;
at the sizes this package deals with (a few variables, degrees below ~60) that
is fast enough and needs no modular machinery.
"""

from __future__ import annotations

from functools import reduce
from math import gcd as igcd
from typing import Iterable, Optional

from . import upoly as U
from .poly import MultiPoly, sort_vars

_CHECK_PRIME = 2147483629


def _main_var(*polys: MultiPoly) -> Optional[str]:
    used = sort_vars(v for p in polys for v in p.used_vars())
    return used[-1] if used else None


def _normalize(p: MultiPoly) -> MultiPoly:
    return p.content_primitive()[1] if p else p


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Greatest common divisor, primitive over Z with positive leading coefficient."""
    a, b = MultiPoly._align(a, b)
    if not a:
        return _normalize(b)
    if not b:
        return _normalize(a)
    x = _main_var(a, b)
    if x is None:
        return MultiPoly.constant(1, a.vars)
    # monomial factors are split off first; they would defeat the coprimality test
    ma, mb = _monomial_part(a), _monomial_part(b)
    if any(ma) or any(mb):
        common = tuple(min(i, j) for i, j in zip(ma, mb))
        g = poly_gcd(_divide_monomial(a, ma), _divide_monomial(b, mb))
        return MultiPoly({tuple(e + c for e, c in zip(k, common)): v for k, v in g.terms.items()}, g.vars)
    if set(a.used_vars()) | set(b.used_vars()) == {x}:
        return _univariate_gcd(a, b, x)
    ca, pa = content_in(a, x)
    cb, pb = content_in(b, x)
    g_content = poly_gcd(ca, cb)
    if pa.degree(x) < pb.degree(x):
        pa, pb = pb, pa
    if pb.degree(x) > 0 and _coprime_certificate(pa, pb, x):
        return _normalize(g_content)
    while pb and pb.degree(x) > 0:
        r = pa.pseudo_rem(pb, x)
        pa, pb = pb, (content_in(r, x)[1] if r else r)
    g = pa if not pb else MultiPoly.constant(1, a.vars)
    return _normalize(g_content * g)


def _univariate_gcd(a: MultiPoly, b: MultiPoly, x: str) -> MultiPoly:
    ix = a.vars.index(x)

    def dense(p):
        out = [0] * (p.degree(x) + 1)
        for e, c in p.terms.items():
            out[e[ix]] = c
        return out

    g = U.gcd_z(dense(a), dense(b))
    terms = {}
    for k, c in enumerate(g):
        if c:
            e = [0] * len(a.vars)
            e[ix] = k
            terms[tuple(e)] = c
    return _normalize(MultiPoly(terms, a.vars))


def _monomial_part(p: MultiPoly):
    return tuple(min(e[i] for e in p.terms) for i in range(len(p.vars)))


def _divide_monomial(p: MultiPoly, mono) -> MultiPoly:
    return MultiPoly({tuple(e - k for e, k in zip(ex, mono)): c for ex, c in p.terms.items()}, p.vars)


def _image_mod_p(p: MultiPoly, x: str, point: dict, prime: int):
    """Dense image in F_p[x] after substituting the other variables."""
    ix = p.vars.index(x)
    others = [(i, point[v]) for i, v in enumerate(p.vars) if i != ix]
    out = [0] * (p.degree(x) + 1)
    for e, c in p.terms.items():
        val = c % prime if isinstance(c, int) else c.numerator * pow(c.denominator, -1, prime) % prime
        for i, v in others:
            if e[i]:
                val = val * pow(v, e[i], prime) % prime
        out[e[ix]] = (out[e[ix]] + val) % prime
    return out


def _coprime_certificate(a: MultiPoly, b: MultiPoly, x: str) -> bool:
    """True only if ``gcd(a, b)`` certainly has degree 0 in ``x``.

    Specializing the other variables (and reducing mod a prime) at a point
    where neither leading coefficient vanishes cannot lower the degree of
    the gcd, so a constant gcd of the images proves coprimality in ``x``.
    """
    for seed in range(3):
        point = {v: 1000003 * (seed + 1) + 7919 * i for i, v in enumerate(a.vars)}
        fa = _image_mod_p(a, x, point, _CHECK_PRIME)
        fb = _image_mod_p(b, x, point, _CHECK_PRIME)
        if len(U.strip(fa)) != len(fa) or len(U.strip(fb)) != len(fb):
            continue
        return U.deg(U.gcd_mod(fa, fb, _CHECK_PRIME)) == 0
    return False


def gcd_list(polys: Iterable[MultiPoly]) -> MultiPoly:
    polys = [p for p in polys]
    return reduce(poly_gcd, polys)


def content_in(p: MultiPoly, x: str):
    """``(content, primitive part)`` of ``p`` viewed as a polynomial in ``x``.

    The content is a polynomial in the other variables, normalized to be
    primitive over Z, so the primitive part may carry a rational factor.
    """
    coeffs = list(p.coefficients_in(x).values())
    if len(coeffs) == 1:
        c = _normalize(coeffs[0])
    else:
        c = reduce(poly_gcd, coeffs)
    return c, p.exquo(c)


def integer_content(p: MultiPoly) -> int:
    return reduce(igcd, (int(c) for c in p.terms.values()))


def squarefree_part(p: MultiPoly, var: str = None) -> MultiPoly:
    """Product of the distinct irreducible factors of ``p`` (primitive over Z).

    For univariate input this is ``p / gcd(p, p')``.  With several variables the
    part depending on ``var`` (default: the largest variable) is handled this
    way and the content in ``var`` is reduced recursively.
    """
    if not p:
        raise ValueError("squarefree part of zero polynomial")
    x = var or _main_var(p)
    if x is None or p.degree(x) <= 0:
        rest = _main_var(p)
        if rest is None:
            return MultiPoly.constant(1, p.vars)
        return squarefree_part(p, rest)
    c, pp = content_in(p, x)
    g = poly_gcd(pp, pp.diff(x))
    core = pp.exquo(g)
    if c.is_constant():
        return _normalize(core)
    return _normalize(core * squarefree_part(c))


def is_squarefree(p: MultiPoly) -> bool:
    return squarefree_part(p).degree() == p.degree()
