"""Factorization over Q of univariate and bivariate polynomials.

Univariate: squarefree decomposition, distinct/equal-degree factorization
modulo a good prime, quadratic Hensel lifting and Zassenhaus recombination.
Bivariate: specialize one variable at an integer, factor the image, lift the
factors adically in the specialized variable and recombine by trial division.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from . import upoly as U
from .gcd import content_in, poly_gcd
from .poly import MultiPoly

Factorization = List[Tuple[MultiPoly, int]]

FIRST_PRIME = 17
PATTERN_PRIMES = 5
SPECIALIZATION_SEARCH = 60
PATTERN_IMAGES = 6


def _primes_from(start: int):
    n = max(start, 2)
    while True:
        if all(n % d for d in range(2, isqrt(n) + 1)):
            yield n
        n += 1


# ---------------------------------------------------------------------------
# factoring over F_p


def distinct_degree(f: Sequence[int], p: int) -> List[Tuple[list, int]]:
    """Split a monic squarefree ``f`` into products of equal-degree factors."""
    out = []
    f = U.monic_mod(f, p)
    h = [0, 1]
    d = 0
    while U.deg(f) >= 2 * (d + 1):
        d += 1
        h = U.powmod_poly(h, p, f, p)
        g = U.gcd_mod(U.mod(U.sub(h, [0, 1]), p), f, p)
        if U.deg(g) > 0:
            out.append((g, d))
            f = U.divmod_mod(f, g, p)[0]
            h = U.rem_mod(h, f, p)
    if U.deg(f) > 0:
        out.append((f, U.deg(f)))
    return out


def equal_degree(g: Sequence[int], d: int, p: int, rng: random.Random) -> List[list]:
    """Cantor-Zassenhaus splitting of a product of degree-``d`` irreducibles."""
    g = U.monic_mod(g, p)
    n = U.deg(g)
    if n == d:
        return [g]
    e = (p ** d - 1) // 2
    while True:
        a = U.strip([rng.randrange(p) for _ in range(n)])
        if U.deg(a) < 1:
            continue
        b = U.mod(U.sub(U.powmod_poly(a, e, g, p), [1]), p)
        h = U.gcd_mod(b, g, p) if b else []
        if h and 0 < U.deg(h) < n:
            rest = U.divmod_mod(g, h, p)[0]
            return equal_degree(h, d, p, rng) + equal_degree(rest, d, p, rng)


def factor_mod_p(f: Sequence[int], p: int, seed: int = 0) -> List[list]:
    """Monic irreducible factors of a squarefree ``f`` modulo ``p``."""
    rng = random.Random(seed)
    out = []
    for g, d in distinct_degree(f, p):
        out.extend(equal_degree(g, d, p, rng))
    return sorted(out, key=lambda h: (len(h), h))


def _is_good_prime(f, p) -> bool:
    if f[-1] % p == 0:
        return False
    return U.deg(U.gcd_mod(f, U.derivative(f), p)) == 0


def _subset_sums(degrees: Sequence[int]) -> set:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _degree_pattern(f: Sequence[int], count: int = PATTERN_PRIMES):
    """Good primes and the degrees a factor of ``f`` over Z can have.

    Every factor over Z splits into factors modulo each good prime, so its
    degree is a subset sum of every modular degree pattern.
    """
    n = U.deg(f)
    primes = []
    allowed = None
    for p in _primes_from(FIRST_PRIME):
        if not _is_good_prime(f, p):
            continue
        primes.append(p)
        degrees = []
        for g, d in distinct_degree(f, p):
            degrees.extend([d] * (U.deg(g) // d))
        sums = _subset_sums(degrees)
        allowed = sums if allowed is None else allowed & sums
        if len(primes) == count or not any(0 < s < n for s in allowed):
            break
    return primes, allowed


# ---------------------------------------------------------------------------
# Hensel lifting


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lifting step from modulus ``m`` to ``m*m``."""
    M = m * m
    e = U.mod(U.sub(f, U.mul(g, h)), M)
    q, r = U.divmod_mod(U.mul_mod(s, e, M), h, M)
    g2 = U.mod(U.add(U.add(g, U.mul(t, e)), U.mul(q, g)), M)
    h2 = U.mod(U.add(h, r), M)
    b = U.mod(U.sub(U.add(U.mul(s, g2), U.mul(t, h2)), [1]), M)
    c, d = U.divmod_mod(U.mul_mod(s, b, M), h2, M)
    s2 = U.mod(U.sub(s, d), M)
    t2 = U.mod(U.sub(U.sub(t, U.mul(t, b)), U.mul(c, g2)), M)
    return g2, h2, s2, t2, M


def hensel_lift(f: Sequence[int], factors: Sequence[list], p: int, k: int) -> List[list]:
    """Lift monic ``factors`` with ``f = lc(f) * prod(factors) mod p`` to modulus ``p**k``."""
    target = p ** k
    if len(factors) == 1:
        inv = pow(f[-1], -1, target)
        return [U.mod([c * inv for c in f], target)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = U.mod(U.scale(_product_mod(left, p), f[-1]), p)
    h = _product_mod(right, p)
    _, s, t = U.xgcd_mod(g, h, p)
    m = p
    while m < target:
        g, h, s, t, m = _hensel_step(f, g, h, s, t, m)
    g, h = U.mod(g, target), U.mod(h, target)
    return hensel_lift(g, left, p, k) + hensel_lift(h, right, p, k)


def _product_mod(polys, m):
    out = [1]
    for q in polys:
        out = U.mul_mod(out, q, m)
    return out


# ---------------------------------------------------------------------------
# univariate factoring over Z


def _coefficient_bound(f) -> int:
    """Bound on coefficients of ``lc(f)/lc(h) * h`` for any factor ``h`` of ``f``."""
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return abs(f[-1]) * (2 ** U.deg(f)) * norm2


def factor_squarefree_z(f: Sequence[int], seed: int = 0) -> List[list]:
    """Irreducible factors of a primitive squarefree ``f`` in Z[x] (dense lists)."""
    f = U.primitive(f)
    n = U.deg(f)
    if n <= 1:
        return [f] if n == 1 else []
    if f[0] == 0:
        return [[0, 1]] + factor_squarefree_z(f[1:], seed)

    primes, allowed = _degree_pattern(f)
    if not any(0 < s < n for s in allowed):
        return [f]

    p = primes[0]
    modular = factor_mod_p(f, p, seed)
    if len(modular) == 1:
        return [f]
    bound = 2 * _coefficient_bound(f) + 1
    k = 1
    while p ** k <= bound:
        k += 1
    lifted = hensel_lift(f, modular, p, k)
    return _recombine(f, lifted, p ** k, allowed)


def _recombine(f, lifted, modulus, allowed) -> List[list]:
    factors = []
    remaining = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(remaining):
        found = None
        for subset in combinations(remaining, size):
            d = sum(U.deg(lifted[i]) for i in subset)
            if d not in allowed:
                continue
            lc = f[-1]
            if f[0]:
                const = lc
                for i in subset:
                    const = const * lifted[i][0] % modulus
                const = const - modulus if const > modulus // 2 else const
                if const == 0 or (lc * f[0]) % const:
                    continue
            cand = [lc]
            for i in subset:
                cand = U.mul_mod(cand, lifted[i], modulus)
            cand = U.primitive(U.sym(cand, modulus))
            try:
                quotient = U.exact_div_z(f, cand)
            except ValueError:
                continue
            found = subset
            factors.append(cand)
            f = quotient
            break
        if found is None:
            size += 1
        else:
            remaining = [i for i in remaining if i not in found]
    if U.deg(f) > 0:
        factors.append(U.primitive(f))
    return factors


def _sort_key(item):
    poly, mult = item
    return (poly.degree(), [(e, str(c)) for e, c in poly.sorted_terms()], mult)


def _merge(items: Factorization) -> Factorization:
    merged: Dict[MultiPoly, int] = {}
    for f, k in items:
        merged[f] = merged.get(f, 0) + k
    return sorted(merged.items(), key=_sort_key)


def factor_uni_Q(p: MultiPoly, seed: int = 0) -> Factorization:
    """Irreducible factorization over Q of a polynomial in one variable.

    Factors are primitive integer polynomials with positive leading
    coefficient; the product of ``factor**multiplicity`` is the primitive
    part of ``p``.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    used = p.used_vars()
    if len(used) > 1:
        raise ValueError("factor_uni_Q expects a univariate polynomial")
    if not used:
        return []
    x = used[0]
    _, prim = p.content_primitive()
    dense = [0] * (prim.degree(x) + 1)
    i = prim.vars.index(x)
    for e, c in prim.terms.items():
        dense[e[i]] = c
    out = []
    for g, k in U.squarefree_decomposition(dense):
        for h in factor_squarefree_z(g, seed):
            out.append((MultiPoly.from_univariate(h, x).with_vars(p.vars), k))
    return _merge(out)


# ---------------------------------------------------------------------------
# bivariate factoring over Q


def _to_dense(p: MultiPoly, z: str, y: str) -> List[list]:
    """``rows[k]`` is the dense y-coefficient list of ``z**k``."""
    iz, iy = p.vars.index(z), p.vars.index(y)
    rows = [[0] * (p.degree(y) + 1) for _ in range(p.degree(z) + 1)]
    for e, c in p.terms.items():
        rows[e[iz]][e[iy]] = c
    return [U.strip(r) for r in rows]


def _from_dense(rows, z: str, y: str) -> MultiPoly:
    terms = {}
    for k, row in enumerate(rows):
        for j, c in enumerate(row):
            if c:
                terms[(k, j)] = c
    return MultiPoly(terms, (z, y))


def _series_mul(a, b, prec):
    out = [[] for _ in range(min(prec, len(a) + len(b) - 1))]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if i + j >= prec:
                break
            if bj:
                out[i + j] = U.add(out[i + j], U.mul(ai, bj))
    return out


def _specialize(f: MultiPoly, x: str, y: str, x0: int) -> list:
    g = f.subs({x: x0})
    iy = g.vars.index(y) if y in g.vars else None
    dense = [0] * (g.degree(y) + 1)
    for e, c in g.terms.items():
        dense[e[iy] if iy is not None else 0] = c
    return U.strip(dense)


def _specializations(f: MultiPoly, x: str, y: str):
    """Integers x0 (0, 1, -1, 2, ...) keeping y-degree and squarefreeness."""
    lcy = f.lc_in(y)
    for i in range(SPECIALIZATION_SEARCH):
        x0 = (i + 1) // 2 * (1 if i % 2 else -1)
        if lcy.evaluate({x: x0}) == 0:
            continue
        image = _specialize(f, x, y, x0)
        if U.deg(U.gcd_z(image, U.derivative(image))) == 0:
            yield x0, image


def _yun(f: MultiPoly, y: str) -> Factorization:
    fy = f.diff(y)
    a = poly_gcd(f, fy)
    b, c = f.exquo(a), fy.exquo(a)
    d = c - b.diff(y)
    out = []
    i = 1
    while b.degree(y) > 0:
        g = poly_gcd(b, d)
        if not g.is_constant():
            out.append((g, i))
        b, c = b.exquo(g), d.exquo(g)
        d = c - b.diff(y)
        i += 1
    return out


def _lift_and_recombine(f: MultiPoly, x: str, y: str, x0: int, images: List[list]) -> List[MultiPoly]:
    z = "_z"
    F = f.rename({x: z}).subs({z: MultiPoly.var(z) + x0})
    rows = _to_dense(F.with_vars((z, y)), z, y)
    dy = len(rows[0]) - 1
    lead = [r[dy] if len(r) > dy else 0 for r in rows]
    lead = U.strip(lead)
    prec = len(rows) + len(lead)

    monic = [[Fraction(c, h[-1]) for c in h] for h in images]
    bezout = []
    for i, g in enumerate(monic):
        cofactor = [Fraction(1)]
        for j, h in enumerate(monic):
            if j != i:
                cofactor = U.mul(cofactor, h)
        _, s, _ = U.xgcd_q(cofactor, g)
        bezout.append(s)

    lifted = [[g] for g in monic]
    lead_series = [[c] if c else [] for c in lead]
    lc0 = Fraction(lead[0])
    for k in range(1, prec):
        prod = lead_series
        for g in lifted:
            prod = _series_mul(prod, g, k + 1)
        have = prod[k] if k < len(prod) else []
        want = rows[k] if k < len(rows) else []
        err = U.sub(want, have)
        for i, g in enumerate(lifted):
            delta = U.divmod_q(U.mul(bezout[i], [c / lc0 for c in err]), monic[i])[1] if err else []
            g.append(delta)

    factors = []
    remaining = list(range(len(lifted)))
    size = 1
    target = f
    while 2 * size <= len(remaining):
        found = None
        for subset in combinations(remaining, size):
            cand = lead_series
            for i in subset:
                cand = _series_mul(cand, lifted[i], prec)
            poly = _from_dense(cand, z, y).subs({z: MultiPoly.var(x) - x0}).with_vars(f.vars)
            poly = content_in(poly, y)[1].primitive()
            if poly.degree(x) > target.degree(x):
                continue
            q, r = target.divmod_multi(poly)
            if r:
                continue
            factors.append(poly)
            target = q
            found = subset
            break
        if found is None:
            size += 1
        else:
            remaining = [i for i in remaining if i not in found]
    if target.degree() > 0:
        factors.append(target.primitive())
    return factors


def _factor_squarefree_biv(f: MultiPoly, x: str, y: str, images) -> List[MultiPoly]:
    if f.degree(x) <= 1 or f.degree(y) <= 1:
        return [f]
    n = f.degree(y)
    # cheap certificate: the y-degree of a factor must be allowed by every image
    allowed = set(range(n + 1))
    for _, image in list(images) + list(_more_images(f, x, y, images)):
        allowed &= _degree_pattern(image)[1]
        if not any(0 < s < n for s in allowed):
            return [f]
    best = None
    for x0, image in images:
        parts = factor_squarefree_z(image)
        if len(parts) == 1:
            return [f]
        if best is None or len(parts) < len(best[1]):
            best = (x0, parts)
    if best is None:
        raise ValueError("no good integer specialization found")
    return _lift_and_recombine(f, x, y, best[0], best[1])


def _more_images(f: MultiPoly, x: str, y: str, images, count: int = PATTERN_IMAGES):
    seen = {x0 for x0, _ in images}
    out = []
    for x0, image in _specializations(f, x, y):
        if x0 not in seen:
            out.append((x0, image))
            if len(out) == count:
                break
    return out


def factor_biv_Q(p: MultiPoly, seed: int = 0) -> Factorization:
    """Irreducible factorization over Q of a polynomial in at most two variables."""
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    used = p.used_vars()
    if len(used) <= 1:
        return factor_uni_Q(p, seed)
    if len(used) > 2:
        raise ValueError("factor_biv_Q expects at most two variables")
    a, b = used
    out: Factorization = []
    f = p.primitive()
    for v in used:
        k = f.min_degree(v)
        if k:
            out.append((MultiPoly.var(v).with_vars(p.vars), k))
            f = f.exquo(MultiPoly.var(v).with_vars(f.vars) ** k)
    # main variable y: the one of smaller degree
    y, x = (a, b) if f.degree(a) <= f.degree(b) else (b, a)
    for v in (y, x):
        cont, f = content_in(f, v)
        if not cont.is_constant():
            out.extend((g.with_vars(p.vars), k) for g, k in factor_uni_Q(cont, seed))
    f = f.primitive()
    if f.is_constant():
        return _merge(out)

    images = []
    for x0, image in _specializations(f, x, y):
        images.append((x0, image))
        if len(images) == 3:
            break
    if images:
        pieces = [(f, 1)]
    else:
        pieces = _yun(f, y)
        images = None
    for g, k in pieces:
        g = g.primitive()
        if images is None:
            g_images = []
            for item in _specializations(g, x, y):
                g_images.append(item)
                if len(g_images) == 3:
                    break
        else:
            g_images = images
        for h in _factor_squarefree_biv(g, x, y, g_images):
            out.append((h.with_vars(p.vars).primitive(), k))
    return _merge(out)
