"""Recurrences for colored Jones tables and their specialization at t = -1.

An operator ``alpha = sum_i a_i(t, M) L^i`` acts on ``n -> J_n`` by
``(M f)(n) = t^{2n} f(n)`` and ``(L f)(n) = f(n+1)``, so ``LM = t^2 ML``.
The coefficients live in ``Z[t^2, M^2]``; caps ``(dL, dM, dt)`` bound the
order, the degree in ``M^2`` and the degree in ``t^2``.

Guessing works modulo word-sized primes: the unknown coefficients of the
``a_i`` enter linearly, each ``n`` of the fitting window contributes one
scalar equation per power of ``t``, and the kernel of that system is found
by modular echelon form.  Solutions are lifted by Chinese remaindering and
rational reconstruction and then checked with exact Laurent arithmetic on
the fitting window and on a disjoint holdout window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .apoly import balanced_check
from .exactalg.gcd import poly_gcd
from .exactalg.laurent import LaurentPoly
from .exactalg.poly import MultiPoly

OP_VARS = ("t", "M")
FIRST_N = 2
HOLDOUT = 3
EXTRA_EQUATIONS = 4
MAX_PRIMES = 40

Caps = Tuple[int, int, int]


class RecurrenceNotFound(RuntimeError):
    """No verified operator exists within the caps (a budget report, not a theorem)."""


class InsufficientTable(ValueError):
    """The table is too short for the requested caps."""


class AJAssertionError(AssertionError):
    """A structural fact about the specialized operator failed."""


@dataclass
class RecurrenceOp:
    dL: int
    coeffs: List[MultiPoly]
    caps: Caps
    fit: Tuple[int, int] = (0, -1)
    holdout: Tuple[int, int] = (0, -1)

    def as_poly(self) -> MultiPoly:
        """``alpha(t, M, L)`` as a commutative polynomial (normal order: ``a_i`` left of ``L^i``)."""
        total = MultiPoly({}, ("t", "M", "L"))
        for i, a in enumerate(self.coeffs):
            total = total + a * MultiPoly({(i,): 1}, ("L",))
        return total

    def to_json(self) -> dict:
        return {"vars": ["t", "M", "L"], "dL": self.dL,
                "coeffs": [a.to_json() for a in self.coeffs],
                "caps": list(self.caps), "fit": list(self.fit), "holdout": list(self.holdout)}

    @classmethod
    def from_json(cls, data) -> "RecurrenceOp":
        return cls(data["dL"], [MultiPoly.from_json(a).with_vars(OP_VARS) for a in data["coeffs"]],
                   tuple(data["caps"]), tuple(data["fit"]), tuple(data["holdout"]))


@dataclass
class AJWitness:
    alpha_at_minus1: MultiPoly
    hat_alpha: MultiPoly
    verification_range: Tuple[int, int]
    balanced_cert: Optional[Tuple[int, int, int]]

    def to_json(self) -> dict:
        return {"alpha_at_minus1": self.alpha_at_minus1.to_json(),
                "hat_alpha": self.hat_alpha.to_json(),
                "verification_range": list(self.verification_range),
                "balanced_cert": list(self.balanced_cert) if self.balanced_cert else None}


# ---------------------------------------------------------------------------
# applying an operator


def apply_operator(op: RecurrenceOp, table: Mapping[int, LaurentPoly], n: int) -> LaurentPoly:
    """``(alpha J)(n) = sum_i a_i(t, t^{2n}) J_{n+i}``."""
    return _apply(op.coeffs, table, n)


def _apply(coeffs: Sequence[MultiPoly], table, n: int) -> LaurentPoly:
    total: Dict[int, int] = {}
    for i, a in enumerate(coeffs):
        if not a:
            continue
        J = table[n + i]
        it, iM = a.vars.index("t"), a.vars.index("M")
        for e, c in a.terms.items():
            shift = e[it] + 2 * n * e[iM]
            for je, jc in J.terms.items():
                k = je + shift
                total[k] = total.get(k, 0) + c * jc
    return LaurentPoly(total)


def annihilates(coeffs: Sequence[MultiPoly], table, ns: Sequence[int]) -> bool:
    return all(not _apply(coeffs, table, n) for n in ns)


# ---------------------------------------------------------------------------
# linear system


def _columns(dL: int, dM: int, dt: int) -> int:
    return (dL + 1) * (dM + 1) * (dt + 1)


def _system_mod_p(table, dL: int, dM: int, dt: int, ns: Sequence[int], p: int) -> np.ndarray:
    """Rows: one scalar equation per (n, power of t).  Column ``(i, j, k)`` is
    the coefficient of ``t^{2k} M^{2j}`` in ``a_i``."""
    ncols = _columns(dL, dM, dt)
    karr = np.arange(dt + 1)
    blocks = []
    for n in ns:
        polys = [table[n + i] for i in range(dL + 1)]
        lo = min(J.min_exp() for J in polys if J)
        hi = max(J.max_exp() for J in polys if J) + 2 * dt + 4 * n * dM
        B = np.zeros(((hi - lo) // 2 + 1, ncols), dtype=np.int64)
        for i, J in enumerate(polys):
            if not J:
                continue
            E = np.array(list(J.terms), dtype=np.int64)
            C = np.array([int(c) % p for c in J.terms.values()], dtype=np.int64)
            for j in range(dM + 1):
                rows = (E - lo + 4 * n * j) // 2
                col0 = (i * (dM + 1) + j) * (dt + 1)
                B[rows[:, None] + karr[None, :], col0 + karr[None, :]] = C[:, None]
        blocks.append(B[B.any(axis=1)])
    return np.concatenate(blocks) if blocks else np.zeros((0, ncols), dtype=np.int64)


def _dot_mod(row: np.ndarray, x: np.ndarray, p: int) -> int:
    lo = x & 0xFFFF
    hi = x >> 16
    return int(((row @ hi) % p * (1 << 16) + (row @ lo)) % p)


def _null_vector(basis: np.ndarray, pivots: Sequence[int], free: int, ncols: int, p: int) -> np.ndarray:
    """Kernel vector with ``x[free] = 1`` and every other free coordinate 0."""
    x = np.zeros(ncols, dtype=np.int64)
    x[free] = 1
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        x[c] = (-_dot_mod(basis[r], x, p)) % p
    return x


def _word_primes(start: int = 2 ** 31 - 1) -> Iterator[int]:
    from .cjones.statesum import _is_prime

    x = start
    while True:
        if _is_prime(x):
            yield x
        x -= 1


def _rational_reconstruction(a: int, m: int) -> Optional[Fraction]:
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def fit_window(table_N: int, dL: int, holdout: int = HOLDOUT) -> Tuple[range, range]:
    last = table_N - dL
    fit = range(FIRST_N, last - holdout + 1)
    hold = range(last - holdout + 1, last + 1)
    return fit, hold


def _table_N(table) -> int:
    if hasattr(table, "N"):
        return table.N
    return max(n for n in table if n > 0)


class _Guesser:
    """Shared modular data for one table and one fitting window."""

    def __init__(self, table, fit: Sequence[int]):
        self.table = table
        self.fit = list(fit)
        self._nullity: Dict[Caps, int] = {}
        self._primes = _word_primes()
        self.primes = [next(self._primes)]

    def prime(self, k: int) -> int:
        while len(self.primes) <= k:
            self.primes.append(next(self._primes))
        return self.primes[k]

    def echelon(self, caps: Caps, p: int):
        A = _system_mod_p(self.table, *caps, self.fit, p)
        ncols = _columns(*caps)
        if A.shape[0] < ncols + EXTRA_EQUATIONS:
            raise InsufficientTable(
                f"{A.shape[0]} equations for {ncols} unknowns at caps {caps}; need {ncols + EXTRA_EQUATIONS}")
        basis, pivots = kernels.echelon_mod_p(A, p, True)
        return basis, list(pivots), ncols

    def supported(self, caps: Caps) -> bool:
        try:
            self.nullity(caps)
        except InsufficientTable:
            return False
        return True

    def nullity(self, caps: Caps) -> int:
        """Kernel dimension modulo the first prime (an upper bound for the rational one)."""
        if caps not in self._nullity:
            _, pivots, ncols = self.echelon(caps, self.prime(0))
            self._nullity[caps] = ncols - len(pivots)
        return self._nullity[caps]

    def solve(self, caps: Caps) -> Optional[List[MultiPoly]]:
        """Exact kernel element with the smallest support, or None."""
        basis, pivots, ncols = self.echelon(caps, self.prime(0))
        free_cols = sorted(set(range(ncols)) - set(pivots))
        if not free_cols:
            return None
        p = self.prime(0)
        best = None
        for f in free_cols:
            v = _null_vector(basis, pivots, f, ncols, p)
            key = (int(np.count_nonzero(v)), f)
            if best is None or key < best[0]:
                best = (key, f, v)
        _, free, v = best
        residues = [v]
        moduli = [p]
        k = 1
        while k < MAX_PRIMES:
            coeffs = self._lift(residues, moduli, caps)
            if coeffs is not None and annihilates(coeffs, self.table, self.fit):
                return coeffs
            q = self.prime(k)
            k += 1
            b, piv, _ = self.echelon(caps, q)
            if piv != pivots:
                continue
            residues.append(_null_vector(b, piv, free, ncols, q))
            moduli.append(q)
        return None

    def _lift(self, residues, moduli, caps: Caps) -> Optional[List[MultiPoly]]:
        M = 1
        values = [0] * len(residues[0])
        for res, p in zip(residues, moduli):
            inv = pow(M % p, -1, p) if M > 1 else 1
            for i in range(len(values)):
                delta = (int(res[i]) - values[i]) * inv % p
                values[i] += M * delta
            M *= p
        fracs = []
        for x in values:
            fr = _rational_reconstruction(x, M)
            if fr is None:
                return None
            fracs.append(fr)
        den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fracs), 1)
        ints = [int(f * den) for f in fracs]
        return _coeffs_from_vector(ints, caps)


def _coeffs_from_vector(vec: Sequence[int], caps: Caps) -> List[MultiPoly]:
    dL, dM, dt = caps
    out = []
    idx = 0
    for i in range(dL + 1):
        terms = {}
        for j in range(dM + 1):
            for k in range(dt + 1):
                if vec[idx]:
                    terms[(2 * k, 2 * j)] = vec[idx]
                idx += 1
        out.append(MultiPoly(terms, OP_VARS))
    return out


def _normalize(coeffs: List[MultiPoly], table, ns: Sequence[int]) -> List[MultiPoly]:
    """Divide out the common polynomial factor and fix the sign."""
    nonzero = [a for a in coeffs if a]
    g = reduce(poly_gcd, nonzero)
    if not g.is_constant():
        reduced = [a.exquo(g) if a else a for a in coeffs]
        if annihilates(reduced, table, ns):
            coeffs = reduced
    content = reduce(gcd, (abs(int(c)) for a in coeffs for c in a.terms.values()))
    top = coeffs[-1] if coeffs[-1] else nonzero[-1]
    sign = -1 if top.leading_coeff() < 0 else 1
    return [MultiPoly({e: sign * int(c) // content for e, c in a.terms.items()}, OP_VARS).with_vars(OP_VARS)
            for a in coeffs]


def guess_recurrence(table, dL: int, dM: int, dt: int, fit: Sequence[int] = None) -> Optional[RecurrenceOp]:
    """Operator with caps ``(dL, dM, dt)`` annihilating the table on the fitting window."""
    if dL < 1 or dM < 0 or dt < 0:
        raise ValueError("caps must satisfy dL >= 1 and dM, dt >= 0")
    N = _table_N(table)
    if fit is None:
        fit = range(FIRST_N, N - dL + 1)
    fit = list(fit)
    if not fit or fit[-1] + dL > N:
        raise InsufficientTable(f"table of length {N} cannot support order {dL} on window {fit}")
    guesser = _Guesser(table, fit)
    caps = (dL, dM, dt)
    if guesser.nullity(caps) == 0:
        return None
    coeffs = guesser.solve(caps)
    if coeffs is None:
        return None
    coeffs = _normalize(coeffs, table, fit)
    return RecurrenceOp(dL, coeffs, caps, (fit[0], fit[-1]))


def _frontier(guesser: _Guesser, dL: int, dM_max: int, dt_max: int, notes: List[str]) -> Dict[int, int]:
    """Smallest feasible dt for each dM (feasibility is monotone in both caps).

    Cells with fewer equations than the window rule demands are not tested;
    the dt range is cut back to what the table supports and the cut is noted.
    """
    out = {}
    upper = dt_max
    for dM in range(dM_max + 1):
        top = upper
        while top >= 0 and not guesser.supported((dL, dM, top)):
            top -= 1
        if top < upper:
            notes.append(f"caps ({dL}, {dM}, {upper}) exceed the table; searched dt <= {top}")
        if top < 0 or guesser.nullity((dL, dM, top)) == 0:
            continue
        lo, hi = 0, top
        while lo < hi:
            mid = (lo + hi) // 2
            if guesser.nullity((dL, dM, mid)) > 0:
                hi = mid
            else:
                lo = mid + 1
        out[dM] = lo
        upper = lo
    return out


def _graded_cells(frontier: Dict[int, int], dM_max: int, dt_max: int) -> List[Tuple[int, int]]:
    cells = [(dM, dt) for dM in frontier for dt in range(frontier[dM], dt_max + 1)]
    return sorted(cells, key=lambda c: (c[0] + c[1], c[0]))


def minimal_recurrence(table, maxcaps: Caps = (6, 12, 12), holdout: int = HOLDOUT) -> RecurrenceOp:
    """First operator in graded cap order that also annihilates a holdout window."""
    if holdout < 3:
        raise ValueError("the holdout window needs at least 3 values of n")
    dL_max, dM_max, dt_max = maxcaps
    N = _table_N(table)
    tried: List[str] = []
    for dL in range(1, dL_max + 1):
        fit, hold = fit_window(N, dL, holdout)
        if len(fit) < 1:
            if dL == 1:
                raise InsufficientTable(f"table of length {N} is too short for any recurrence search")
            tried.append(f"order {dL}: table too short")
            break
        guesser = _Guesser(table, fit)
        box = (dL, dM_max, dt_max)
        if guesser.supported(box) and guesser.nullity(box) == 0:
            tried.append(f"order {dL}: no kernel")
            continue
        frontier = _frontier(guesser, dL, dM_max, dt_max, tried)
        if not frontier:
            tried.append(f"order {dL}: no kernel")
        for dM, dt in _graded_cells(frontier, dM_max, dt_max):
            caps = (dL, dM, dt)
            if not guesser.supported(caps):
                continue
            coeffs = guesser.solve(caps)
            if coeffs is None or not coeffs[0] or not coeffs[-1]:
                continue
            coeffs = _normalize(coeffs, table, list(fit) + list(hold))
            if annihilates(coeffs, table, hold):
                return RecurrenceOp(dL, coeffs, caps, (fit[0], fit[-1]), (hold[0], hold[-1]))
            tried.append(f"caps {caps}: holdout failed")
    raise RecurrenceNotFound(f"no verified recurrence within caps {maxcaps} (table length {N}): " + "; ".join(tried))


# ---------------------------------------------------------------------------
# specialization


def specialize(op: RecurrenceOp, t_value: int) -> MultiPoly:
    """``alpha(t_value, m, l)`` in variables ``(m, l)``."""
    out = {}
    for i, a in enumerate(op.coeffs):
        it, iM = a.vars.index("t"), a.vars.index("M")
        for e, c in a.terms.items():
            key = (e[iM], i)
            out[key] = out.get(key, 0) + c * t_value ** e[it]
    return MultiPoly(out, ("m", "l"))


def specialize_and_quotient(op: RecurrenceOp) -> AJWitness:
    at_minus = specialize(op, -1)
    at_plus = specialize(op, 1)
    if at_minus != at_plus:
        raise AJAssertionError("alpha(1) != alpha(-1); the operator has odd powers of t")
    if not at_minus:
        raise AJAssertionError("alpha(-1) vanishes identically")
    l_minus_1 = MultiPoly({(0, 1): 1, (0, 0): -1}, ("m", "l"))
    quotient, remainder = at_minus.divmod_multi(l_minus_1)
    if remainder:
        raise AJAssertionError("l - 1 does not divide alpha(-1); enlarge the caps and retry")
    return AJWitness(at_minus, quotient, (op.fit[0], op.holdout[1]), balanced_check(at_minus))


def operator_balance_check(op: RecurrenceOp) -> Optional[Tuple[int, int, int]]:
    """``(sign, a, b)`` with ``sign t^{2a} M^b L^dL sigma(alpha) = alpha`` where
    ``sigma`` inverts ``M`` and ``L``; None when no such integers exist.

    Moving ``L^dL`` past ``a_i(t, M^{-1})`` turns it into ``a_i(t, t^{-2 dL} M^{-1})``,
    so the identity reads ``a_{dL-i}(t, M) = sign t^{2a} M^b a_i(t, t^{-2 dL} M^{-1})``.
    """
    d = op.dL
    images = []
    for a in op.coeffs:
        it, iM = a.vars.index("t"), a.vars.index("M")
        images.append({(e[it] - 2 * d * e[iM], -e[iM]): c for e, c in a.terms.items()})
    target = [{(e[a.vars.index("t")], e[a.vars.index("M")]): c for e, c in a.terms.items()}
              for a in op.coeffs]
    first, goal = images[0], target[d]
    if not first or not goal:
        return None
    (te0, me0), c0 = max(first.items())
    (te1, me1), c1 = max(goal.items())
    tshift, mshift = te1 - te0, me1 - me0
    if c1 not in (c0, -c0) or tshift % 2:
        return None
    sign = 1 if c1 == c0 else -1
    for i in range(d + 1):
        moved = {(te + tshift, me + mshift): sign * c for (te, me), c in images[i].items()}
        if moved != target[d - i]:
            return None
    return sign, tshift // 2, mshift
