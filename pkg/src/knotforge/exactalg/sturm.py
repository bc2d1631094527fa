"""Exact real-root counting with Sturm sequences."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from . import upoly as U


def sturm_sequence(f: Sequence[int]) -> List[list]:
    seq = [U.strip([Fraction(c) for c in f])]
    seq.append(U.derivative(seq[0]))
    while seq[-1] and U.deg(seq[-1]) > 0:
        r = U.divmod_q(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at_infinity(seq, positive: bool):
    out = []
    for s in seq:
        lc = s[-1]
        if not positive and U.deg(s) % 2:
            lc = -lc
        out.append(lc)
    return out


def count_real_roots(f: Sequence[int]) -> int:
    """Number of distinct real roots of a nonzero integer polynomial."""
    f = U.strip(f)
    if U.deg(f) <= 0:
        return 0
    seq = sturm_sequence(f)
    return _sign_changes(_signs_at_infinity(seq, False)) - _sign_changes(_signs_at_infinity(seq, True))


def has_nonreal_root(f: Sequence[int]) -> bool:
    """True when a squarefree ``f`` has a root off the real line."""
    return count_real_roots(f) < U.deg(U.strip(f))
