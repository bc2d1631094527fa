"""Two-bridge knots b(p, q) and their Riley polynomials.

The knot group of b(p, q) is ``<a, b | w a = b w>`` with
``w = a^{e1} b^{e2} a^{e3} ... `` (p-1 letters) and ``e_i = (-1)^{floor(iq/p)}``.
Nonabelian representations up to conjugation are normalized to::

    a -> [[s, 1], [0, 1]]        b -> [[s, 0], [-s*u, 1]]

and the relator holds exactly when ``phi(s, u) = W11 + (1 - s) W12 = 0``.
Matrices of inverse letters carry a factor ``1/s``; products are kept as
integer matrices together with the power of ``s`` they must be divided by.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

import mpmath

from .exactalg.poly import MultiPoly

S = MultiPoly.var("s").with_vars(("s", "u"))
U = MultiPoly.var("u").with_vars(("s", "u"))
ONE = MultiPoly.constant(1, ("s", "u"))
ZERO = MultiPoly({}, ("s", "u"))

Letter = Tuple[str, int]
Matrix = List[List[MultiPoly]]


@dataclass(frozen=True)
class TwoBridgeKnot:
    """The knot b(p, q) with p, q odd, coprime and ``1 <= q <= p - 2``.

    ``mirrored`` selects the mirror image b(p, -q); its relator word has every
    sign ``e_i`` flipped.
    """

    p: int
    q: int
    mirrored: bool = False

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 3 or p % 2 == 0:
            raise ValueError(f"p must be odd and at least 3, got {p}")
        if not (1 <= q <= p - 2) or q % 2 == 0:
            raise ValueError(f"q must be odd with 1 <= q <= p-2, got {q}")
        if gcd(p, q) != 1:
            raise ValueError(f"p and q must be coprime, got ({p}, {q})")

    @property
    def is_torus(self) -> bool:
        return self.q == 1

    @property
    def is_hyperbolic(self) -> bool:
        return self.q != 1

    @property
    def signed_q(self) -> int:
        return -self.q if self.mirrored else self.q

    @property
    def name(self) -> str:
        return f"b({self.p},{self.signed_q})"

    def _classes(self, q: int):
        return {q % self.p, pow(q, -1, self.p)}

    def is_equivalent(self, other: "TwoBridgeKnot") -> bool:
        """Same knot type: ``q' = q^{+-1} mod p`` (signed q)."""
        return self.p == other.p and other.signed_q % self.p in self._classes(self.signed_q)

    def is_mirror_of(self, other: "TwoBridgeKnot") -> bool:
        """``q' = -q^{+-1} mod p`` (signed q)."""
        return self.p == other.p and other.signed_q % self.p in self._classes(-self.signed_q)

    def mirror(self) -> "TwoBridgeKnot":
        return TwoBridgeKnot(self.p, self.q, not self.mirrored)


@dataclass(frozen=True)
class Normalized:
    knot: TwoBridgeKnot
    canonical_input: bool


def normalize(p: int, q: int) -> Normalized:
    """Bring ``(p, q)`` into the odd window ``1 <= q <= p - 2``.

    ``q mod p`` is used when it is odd.  Otherwise ``q`` is congruent to the
    odd number ``-(p - q mod p)`` and the result is the mirror of
    ``b(p, p - q mod p)``.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and at least 3, got {p}")
    if q % p == 0 or gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got ({p}, {q})")
    r = q % p
    if r % 2 == 1:
        return Normalized(TwoBridgeKnot(p, r), canonical_input=(r == q))
    return Normalized(TwoBridgeKnot(p, p - r, mirrored=True), canonical_input=False)


def epsilon_sequence(K: TwoBridgeKnot) -> List[int]:
    flip = -1 if K.mirrored else 1
    return [flip * (-1 if (i * K.q // K.p) % 2 else 1) for i in range(1, K.p)]


def relator_word(K: TwoBridgeKnot) -> List[Letter]:
    """``w`` as a list of ``(generator, exponent)`` pairs."""
    return [("a" if i % 2 == 0 else "b", e) for i, e in enumerate(epsilon_sequence(K))]


# ---------------------------------------------------------------------------
# symbolic matrices over Z[s, u]


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return [[x[i][0] * y[0][j] + x[i][1] * y[1][j] for j in range(2)] for i in range(2)]


def letter_matrix(letter: Letter) -> Tuple[Matrix, int]:
    """Integer matrix ``X`` and ``k`` with ``rho(letter) = X / s^k``."""
    gen, e = letter
    if gen == "a":
        return ([[S, ONE], [ZERO, ONE]], 0) if e > 0 else ([[ONE, -ONE], [ZERO, S]], 1)
    return ([[S, ZERO], [-(S * U), ONE]], 0) if e > 0 else ([[ONE, ZERO], [S * U, S]], 1)


def word_matrix(word: Sequence[Letter]) -> Tuple[Matrix, int]:
    """``rho(word) = X / s^k`` with expanded exponents (``(g, e)`` means ``g^e``)."""
    out: Matrix = [[ONE, ZERO], [ZERO, ONE]]
    k = 0
    for gen, e in word:
        step = 1 if e > 0 else -1
        mat, kk = letter_matrix((gen, step))
        for _ in range(abs(e)):
            out = _mat_mul(out, mat)
            k += kk
    return out, k


def _strip_s(p: MultiPoly) -> MultiPoly:
    k = p.min_degree("s")
    return p.shift("s", -k) if k else p


@dataclass(frozen=True)
class RileyPoly:
    phi: MultiPoly
    knot: TwoBridgeKnot

    @property
    def u_degree(self) -> int:
        return self.phi.degree("u")

    @property
    def s_degree(self) -> int:
        return self.phi.degree("s")


def riley_polynomial(K: TwoBridgeKnot) -> RileyPoly:
    W, _ = word_matrix(relator_word(K))
    phi = W[0][0] + (ONE - S) * W[0][1]
    phi = _strip_s(phi).primitive()
    return RileyPoly(phi, K)


def parabolic_polynomial(K: TwoBridgeKnot) -> MultiPoly:
    """``phi(1, u)``, primitive; its roots carry the parabolic representations."""
    return riley_polynomial(K).phi.subs({"s": 1}).compact().primitive()


def dihedral_locus(K: TwoBridgeKnot) -> MultiPoly:
    """``phi(-1, u)``: meridian trace zero, the binary dihedral characters."""
    return riley_polynomial(K).phi.subs({"s": -1}).compact().primitive()


# ---------------------------------------------------------------------------
# numerical oracle


def _numeric_letter(gen: str, e: int, s, u):
    if gen == "a":
        m = mpmath.matrix([[s, 1], [0, 1]])
    else:
        m = mpmath.matrix([[s, 0], [-s * u, 1]])
    return m ** e


def numeric_word(word: Sequence[Letter], s, u):
    out = mpmath.eye(2)
    for gen, e in word:
        out = out * _numeric_letter(gen, e, s, u)
    return out


def _max_abs(m) -> float:
    return float(max(abs(m[i, j]) for i in range(2) for j in range(2)))


def relator_residual(K: TwoBridgeKnot, s0, u0, dps: int = 40) -> float:
    with mpmath.workdps(dps):
        s0, u0 = mpmath.mpc(s0), mpmath.mpc(u0)
        W = numeric_word(relator_word(K), s0, u0)
        a = _numeric_letter("a", 1, s0, u0)
        b = _numeric_letter("b", 1, s0, u0)
        return _max_abs(W * a - b * W)


@dataclass
class Verification:
    ok: bool
    residual: float


def verify_representation(K: TwoBridgeKnot, s0: complex, u0: complex, tol: float = 1e-9) -> Verification:
    """Check the relator ``w a = b w`` numerically at ``(s0, u0)``."""
    residual = relator_residual(K, s0, u0)
    return Verification(residual < tol, residual)


def aberth_roots(coeffs: Sequence, dps: int = 50, tol: float = 1e-30, max_iter: int = 500) -> list:
    """All complex roots of a polynomial (coefficients lowest degree first).

    Aberth-Ehrlich simultaneous iteration in ``dps``-digit arithmetic.
    """
    with mpmath.workdps(dps):
        c = [mpmath.mpc(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        n = len(c) - 1
        if n < 1:
            return []
        lead = c[-1]
        c = [x / lead for x in c]
        dc = [i * c[i] for i in range(1, n + 1)]
        radius = 1 + max(abs(x) for x in c[:-1])
        z = [radius * mpmath.expj(2 * mpmath.pi * k / n + 0.4) for k in range(n)]

        def horner(poly, x):
            r = mpmath.mpc(0)
            for a in reversed(poly):
                r = r * x + a
            return r

        for _ in range(max_iter):
            shift = 0
            new = []
            for i, zi in enumerate(z):
                f = horner(c, zi)
                if f == 0:
                    new.append(zi)
                    continue
                ratio = f / horner(dc, zi)
                repulsion = sum(1 / (zi - zj) for j, zj in enumerate(z) if j != i)
                w = ratio / (1 - ratio * repulsion)
                new.append(zi - w)
                shift = max(shift, abs(w))
            z = new
            if shift < tol:
                break
        return z


def riley_roots(K: TwoBridgeKnot, s0, dps: int = 50) -> list:
    """Roots ``u`` of ``phi(s0, u)`` for a numeric ``s0``."""
    phi = riley_polynomial(K).phi
    coeffs = [0] * (phi.degree("u") + 1)
    with mpmath.workdps(dps):
        s0 = mpmath.mpc(s0)
        for k, c in phi.coefficients_in("u").items():
            coeffs[k] = sum(v * s0 ** e[0] for e, v in c.terms.items())
        return aberth_roots(coeffs, dps=dps)
