"""Checked-in braid words for small 2-bridge knots.

Each entry is validated on load: the bracket determinant must equal ``p`` and
the Alexander polynomial of the closure (from the Burau matrix) must agree,
up to a unit, with the 2-bridge Alexander polynomial of ``b(p, q)`` at a few
sample points.  Neither check sees chirality, so a catalog braid represents
``b(p, q)`` up to mirror image.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Tuple

from ..twobridge import TwoBridgeKnot, epsilon_sequence, normalize
from .braid import BraidWord
from .bracket import determinant

SAMPLE_POINTS = (3, 7, 11)


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    knot: TwoBridgeKnot
    braid: BraidWord

    def to_json(self) -> dict:
        return {"name": self.name, "p": self.knot.p, "q": self.knot.q,
                "strands": self.braid.strands, "braid": list(self.braid.letters)}


def two_bridge_alexander_at(K: TwoBridgeKnot, t) -> Fraction:
    """``sum_i (-1)^i t^{e_1 + ... + e_i}`` over the epsilon sequence."""
    t = Fraction(t)
    total, height = Fraction(1), 0
    for i, e in enumerate(epsilon_sequence(K), 1):
        height += e
        total += (-1) ** i * t ** height
    return total


def _det(M: List[List[Fraction]]) -> Fraction:
    M = [row[:] for row in M]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            for k in range(c, n):
                M[r][k] -= f * M[c][k]
    return d


def burau_alexander_at(braid: BraidWord, t) -> Fraction:
    """Alexander polynomial of the closure at ``t`` (up to ``+-t^k``).

    Uses the principal ``(k-1)``-minor of ``I - B(t)`` for the unreduced
    Burau matrix ``B``.
    """
    t = Fraction(t)
    k = braid.strands
    B = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for x in braid.letters:
        a = abs(x) - 1
        G = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
        if x > 0:
            G[a][a], G[a][a + 1], G[a + 1][a], G[a + 1][a + 1] = 1 - t, t, Fraction(1), Fraction(0)
        else:
            G[a][a], G[a][a + 1], G[a + 1][a], G[a + 1][a + 1] = Fraction(0), Fraction(1), 1 / t, 1 - 1 / t
        B = [[sum(B[i][m] * G[m][j] for m in range(k)) for j in range(k)] for i in range(k)]
    minor = [[Fraction(int(i == j)) - B[i][j] for j in range(k - 1)] for i in range(k - 1)]
    return _det(minor) if k > 1 else Fraction(1)


def _unit_ratio(a: Fraction, b: Fraction, t: int) -> bool:
    if a == 0 or b == 0:
        return a == b
    r = abs(a / b)
    while r.numerator % t == 0:
        r /= t
    while r.denominator % t == 0:
        r *= t
    return r == 1


def validate_entry(entry: CatalogEntry):
    det = determinant(entry.braid)
    if det != entry.knot.p:
        raise CatalogError(f"{entry.name}: braid determinant {det} != p = {entry.knot.p}")
    for t in SAMPLE_POINTS:
        if not _unit_ratio(burau_alexander_at(entry.braid, t), two_bridge_alexander_at(entry.knot, t), t):
            raise CatalogError(f"{entry.name}: Alexander polynomial of the braid does not match {entry.knot.name}")


@lru_cache(maxsize=None)
def load_catalog() -> Tuple[CatalogEntry, ...]:
    text = resources.files("knotforge").joinpath("data/catalog.json").read_text()
    out = []
    for row in json.loads(text):
        knot = normalize(row["p"], row["q"]).knot
        entry = CatalogEntry(row["name"], knot, BraidWord(row["strands"], row["braid"]))
        validate_entry(entry)
        out.append(entry)
    return tuple(out)


def lookup(K: TwoBridgeKnot) -> CatalogEntry:
    """Catalog entry for ``K`` or its mirror image."""
    for entry in load_catalog():
        if entry.knot.is_equivalent(K) or entry.knot.is_mirror_of(K):
            return entry
    raise CatalogError(f"no catalog braid for {K.name}")


def by_name() -> Dict[str, CatalogEntry]:
    return {e.name: e for e in load_catalog()}
