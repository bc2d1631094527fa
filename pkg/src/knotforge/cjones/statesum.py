"""Colored Jones polynomials from braid closures.

The braid acts on ``V_n^{(x) k}``; the invariant is the quantum trace
(weight ``t^{2 sum lam}`` per basis state) times the framing correction
``t^{-(n^2-1) writhe}``, which makes the unknot give ``[n]``.

The braiding preserves the index sum of a basis state, so the trace splits
into independent weight blocks.  Each block is traced at many points modulo
word-sized primes by the compiled kernels; exponent range and a coefficient
bound come from a tropical pass over the same data, and the Laurent
polynomial is recovered by interpolation and Chinese remaindering.  A slow
exact route (:func:`colored_jones_exact`) shares only the braiding table.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .. import kernels
from ..exactalg.laurent import LaurentPoly
from .braid import BraidWord
from .rmatrix import apply_on_tensor, braiding, twist_exponent, weights

SPARE_POINTS = 2


def _check(braid: BraidWord, n: int):
    if n < 1:
        raise ValueError("color n must be at least 1")
    if not braid.is_knot():
        raise ValueError(f"closure of braid {braid} is not a knot")


def colored_jones_exact(braid: BraidWord, n: int) -> LaurentPoly:
    """Direct exact state sum over all ``n^k`` basis states (slow reference)."""
    _check(braid, n)
    lam = weights(n)
    total = LaurentPoly({})
    for state in product(range(n), repeat=braid.strands):
        vec = {state: LaurentPoly({0: 1})}
        for letter in braid.letters:
            vec = apply_on_tensor(vec, letter, n)
        if state in vec:
            total = total + vec[state].shift(2 * sum(lam[i] for i in state))
    return total.shift(-twist_exponent(n) * braid.writhe)


# ---------------------------------------------------------------------------
# block data


@dataclass
class _Block:
    dexp: int
    indptr: np.ndarray
    tgt: np.ndarray
    cid: np.ndarray

    @property
    def size(self) -> int:
        return self.indptr.shape[1] - 1


def _coefficient_table(n: int):
    polys: List[LaurentPoly] = []
    ids: Dict[Tuple[bool, int, int], List[Tuple[Tuple[int, int], int]]] = {}
    for inverse in (False, True):
        for (i, j), terms in braiding(n, inverse).items():
            row = []
            for pair, c in terms:
                row.append((pair, len(polys)))
                polys.append(c)
            ids[(inverse, i, j)] = row
    return polys, ids


def _blocks(braid: BraidWord, n: int, ids) -> List[_Block]:
    lam = weights(n)
    k = braid.strands
    by_weight: Dict[int, List[tuple]] = {}
    for state in product(range(n), repeat=k):
        by_weight.setdefault(sum(state), []).append(state)
    L = len(braid.letters)
    out = []
    for w, states in sorted(by_weight.items()):
        index = {s: i for i, s in enumerate(states)}
        d = len(states)
        indptr = np.zeros((L, d + 1), dtype=np.int64)
        tgt: List[int] = []
        cid: List[int] = []
        for li, letter in enumerate(braid.letters):
            a = abs(letter) - 1
            inverse = letter < 0
            for si, s in enumerate(states):
                indptr[li, si] = len(tgt)
                for (x, y), c in ids[(inverse, s[a], s[a + 1])]:
                    tgt.append(index[s[:a] + (x, y) + s[a + 2:]])
                    cid.append(c)
            indptr[li, d] = len(tgt)
        dexp = 2 * sum(lam[i] for i in states[0])
        out.append(_Block(dexp, indptr, np.asarray(tgt, dtype=np.int64), np.asarray(cid, dtype=np.int64)))
    return out


# ---------------------------------------------------------------------------
# modular arithmetic helpers


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13):
        if x % d == 0:
            return x == d
    r, s = x - 1, 0
    while r % 2 == 0:
        r //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        y = pow(a, r, x)
        if y in (1, x - 1):
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def word_primes(count: int, start: int = 2 ** 31 - 1) -> List[int]:
    """The ``count`` largest primes not exceeding ``start``."""
    out = []
    x = start
    while len(out) < count:
        if _is_prime(x):
            out.append(x)
        x -= 1
    return out


def _power_table(points: np.ndarray, lo: int, hi: int, p: int) -> Dict[int, np.ndarray]:
    inv = np.array([pow(int(x), p - 2, p) for x in points], dtype=np.int64)
    table = {0: np.ones_like(points)}
    cur = np.ones_like(points)
    for e in range(1, max(hi, 0) + 1):
        cur = cur * points % p
        table[e] = cur
    cur = np.ones_like(points)
    for e in range(1, max(-lo, 0) + 1):
        cur = cur * inv % p
        table[-e] = cur
    return table


def _evaluate_coefficients(polys: Sequence[LaurentPoly], points: np.ndarray, p: int):
    """Values of every braiding coefficient at every point, mod p."""
    lo = min(min(c.terms) for c in polys)
    hi = max(max(c.terms) for c in polys)
    table = _power_table(points, lo, hi, p)
    exps = list(range(lo, hi + 1))
    C = np.zeros((len(polys), len(exps)), dtype=np.int64)
    for r, c in enumerate(polys):
        for e, v in c.terms.items():
            C[r, e - lo] = int(v)
    T = np.stack([table[e] for e in exps])
    if np.abs(C).max() < 1 << 20 and len(exps) < 1 << 11:
        # floating-point BLAS is exact here: |C| < 2^20 times 11-bit limbs of T,
        # summed over fewer than 2^11 exponents, stays below 2^53
        Cf = C.astype(np.float64)
        out = np.zeros((len(polys), len(points)), dtype=np.int64)
        for shift in (22, 11, 0):
            limb = ((T >> shift) & 0x7FF).astype(np.float64)
            part = (Cf @ limb).astype(np.int64) % p
            out = (out * (1 << 11) + part) % p
        return out, table
    C %= p
    low = (C @ (T & 0xFFFF)) % p
    high = (C @ (T >> 16)) % p
    return (high * (1 << 16) + low) % p, table


def _interpolate(xs: Sequence[int], ys: Sequence[int], p: int) -> List[int]:
    """Coefficients (lowest first) of the polynomial through the points, mod p.

    The nodes must be consecutive integers, so every divided-difference
    denominator is a small integer whose inverse is precomputed.
    """
    n = len(xs)
    inv = [0] + [pow(j, p - 2, p) for j in range(1, n)]
    coef = np.array(ys, dtype=np.int64) % p
    for j in range(1, n):
        coef[j:] = (coef[j:] - coef[j - 1:-1]) % p * inv[j] % p
    poly = np.zeros(n, dtype=np.int64)
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = np.zeros(n, dtype=np.int64)
        shifted[1:] = poly[:-1]
        poly = (shifted - poly * (xs[i] % p)) % p
        poly[0] = (poly[0] + coef[i]) % p
    return [int(c) for c in poly]


def _horner(poly: Sequence[int], x: int, p: int) -> int:
    r = 0
    for c in reversed(poly):
        r = (r * x + c) % p
    return r


class InterpolationError(RuntimeError):
    """Spare evaluation points disagree with the interpolated polynomial."""


def colored_jones(braid: BraidWord, n: int) -> LaurentPoly:
    """Zero-framed colored Jones polynomial ``J_{K,n}(t)`` of the braid closure."""
    _check(braid, n)
    framing = -twist_exponent(n) * braid.writhe
    if not braid.letters:
        lam = weights(n)
        total = LaurentPoly({})
        for state in product(range(n), repeat=braid.strands):
            total = total + LaurentPoly({2 * sum(lam[i] for i in state): 1})
        return total.shift(framing)

    polys, ids = _coefficient_table(n)
    blocks = _blocks(braid, n, ids)
    cmin = np.array([min(c.terms) for c in polys], dtype=np.int64)
    cmax = np.array([max(c.terms) for c in polys], dtype=np.int64)
    cnorm = np.array([float(c.l1_norm()) for c in polys], dtype=np.float64)

    lo, hi, norm = None, None, 0.0
    live = []
    for b in blocks:
        blo, bhi, bnorm = kernels.statesum_bounds(
            b.indptr, b.tgt, b.cid, cmin, cmax, cnorm, np.full(b.size, b.dexp, dtype=np.int64))
        if bnorm <= 0 or blo > bhi:
            continue
        live.append(b)
        lo = blo if lo is None else min(lo, blo)
        hi = bhi if hi is None else max(hi, bhi)
        norm += bnorm
    if not live:
        return LaurentPoly({})

    degree = hi - lo
    npts = degree + 1 + SPARE_POINTS
    bound = int(norm) + 2
    xs = list(range(2, 2 + npts))
    points = np.array(xs, dtype=np.int64)

    residues: List[List[int]] = []
    moduli: List[int] = []
    modulus = 1
    start = 2 ** 31 - 1
    while modulus <= 2 * bound:
        p = word_primes(1, start)[0]
        start = p - 1
        values, table = _evaluate_coefficients(polys, points, p)
        total = np.zeros(npts, dtype=np.int64)
        for b in live:
            diag = np.ones((b.size, npts), dtype=np.int64)
            tr = kernels.statesum_mod_p(b.indptr, b.tgt, b.cid, values, diag, p)
            total = (total + tr * _table_power(table, b.dexp, points, p)) % p
        # g(x) = x^{-lo} * trace(x) is a polynomial of degree hi - lo
        total = total * _table_power(table, -lo, points, p) % p
        ys = [int(v) for v in total]
        poly = _interpolate(xs[:degree + 1], ys[:degree + 1], p)
        for j in range(degree + 1, npts):
            if _horner(poly, xs[j], p) != ys[j]:
                raise InterpolationError("spare point mismatch; exponent bounds are wrong")
        residues.append(poly)
        moduli.append(p)
        modulus *= p

    coeffs = _crt(residues, moduli)
    return LaurentPoly({lo + framing + i: c for i, c in enumerate(coeffs) if c})


def _table_power(table, e: int, points, p) -> np.ndarray:
    if e in table:
        return table[e]
    base = np.array([pow(int(x), e % (p - 1), p) for x in points], dtype=np.int64)
    return base


def _crt(residues: List[List[int]], moduli: List[int]) -> List[int]:
    """Symmetric CRT lift of coefficient vectors."""
    size = max(len(r) for r in residues)
    out = [0] * size
    M = 1
    for res, p in zip(residues, moduli):
        inv = pow(M % p, -1, p) if M > 1 else 1
        for i in range(size):
            r = res[i] if i < len(res) else 0
            delta = (r - out[i]) * inv % p
            out[i] += M * delta
        M *= p
    half = M // 2
    return [c - M if c > half else c for c in out]
