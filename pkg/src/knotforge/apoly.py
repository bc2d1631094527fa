"""A-polynomials of two-bridge knots and the symmetry checks around them.

The longitude of b(p, q) is ``w~ w a^{-2e}`` where ``w~`` is the relator word
read backwards and ``e`` the exponent sum of ``w``.  On a Riley
representation it is upper triangular, so its (1,1) entry is the longitude
eigenvalue ``l`` on the meridian's eigenline, while the meridian eigenvalue
is ``m = sqrt(s)``.  Eliminating ``u`` between ``phi(s, u) = 0`` and
``l = Lambda(s, u)`` and substituting ``s = m^2`` gives the nonabelian part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath

from .exactalg.factor import factor_biv_Q, factor_uni_Q
from .exactalg.gcd import content_in, squarefree_part
from .exactalg.poly import MultiPoly
from .exactalg.resultant import resultant
from .exactalg.sturm import has_nonreal_root
from .twobridge import (
    Letter,
    TwoBridgeKnot,
    _numeric_letter,
    _max_abs,
    numeric_word,
    parabolic_polynomial,
    relator_word,
    riley_polynomial,
    word_matrix,
)

ML = ("m", "l")


class ConventionError(AssertionError):
    """An exact identity required by the representation convention failed."""


def longitude_word(K: TwoBridgeKnot) -> List[Letter]:
    w = relator_word(K)
    e = sum(x for _, x in w)
    word = list(reversed(w)) + w
    if e:
        word.append(("a", -2 * e))
    return word


@dataclass(frozen=True)
class LongitudeEigenvalue:
    numerator: MultiPoly
    s_power: int

    def as_equation(self) -> MultiPoly:
        """``l * s^k - Lambda`` over the variables (s, l, u)."""
        vars = ("s", "l", "u")
        l = MultiPoly.var("l").with_vars(vars)
        return l.shift("s", self.s_power) - self.numerator.with_vars(vars)


def _reduce_mod_phi(x: MultiPoly, phi: MultiPoly) -> Tuple[MultiPoly, int]:
    """``(r, k)`` with ``x = r / s^k (mod phi)`` and ``deg_u r < deg_u phi``.

    The leading u-coefficient of phi is a unit monomial ``c * s^j``, so the
    pseudo-remainder only introduces powers of s.
    """
    lc = phi.lc_in("u")
    if len(lc.terms) != 1:
        raise ConventionError("leading u-coefficient of phi is not a monomial")
    (exps, c), = lc.terms.items()
    if abs(c) != 1 or any(e for v, e in zip(lc.vars, exps) if v != "s"):
        raise ConventionError("leading u-coefficient of phi is not a unit monomial")
    j = dict(zip(lc.vars, exps)).get("s", 0)
    deg = max(x.degree("u") - phi.degree("u") + 1, 0)
    _, r = x.pseudo_divmod(phi, "u")
    return r.scale(c ** deg), j * deg


def longitude_eigenvalue(K: TwoBridgeKnot) -> LongitudeEigenvalue:
    phi = riley_polynomial(K).phi
    X, k = word_matrix(longitude_word(K))
    r21, _ = _reduce_mod_phi(X[1][0], phi)
    if r21:
        raise ConventionError(f"longitude of {K.name} is not upper triangular modulo phi")
    num, extra = _reduce_mod_phi(X[0][0], phi)
    power = k + extra
    drop = min(power, num.min_degree("s")) if num else 0
    if drop:
        num, power = num.shift("s", -drop), power - drop
    return LongitudeEigenvalue(num, power)


# ---------------------------------------------------------------------------
# cleanup helpers on polynomials in (m, l)


def strip_monomial(p: MultiPoly) -> MultiPoly:
    for v in p.vars:
        k = p.min_degree(v)
        if k:
            p = p.shift(v, -k)
    return p


def remove_single_variable_factors(p: MultiPoly, var: str) -> MultiPoly:
    """Divide out every factor that involves only ``var`` (e.g. m-factors)."""
    others = [v for v in p.used_vars() if v != var]
    if not others:
        return MultiPoly.constant(1, p.vars)
    out = p
    for v in others:
        cont, out = content_in(out, v)
    return out.primitive()


def normalize_sign(p: MultiPoly) -> MultiPoly:
    return p.primitive()


@dataclass
class APolyReport:
    knot: TwoBridgeKnot
    A: MultiPoly
    Ahat: MultiPoly
    m_degree: int
    l_degree: int
    balanced_cert: Optional[Tuple[int, int, int]]
    in_Z_m2_l: bool
    balanced_irreducible: Optional[bool] = None
    eliminant: Optional[MultiPoly] = None
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "knot": self.knot.name,
            "A": self.A.to_json(),
            "Ahat": self.Ahat.to_json(),
            "A_text": str(self.A),
            "Ahat_text": str(self.Ahat),
            "m_degree": self.m_degree,
            "l_degree": self.l_degree,
            "balanced_cert": list(self.balanced_cert) if self.balanced_cert else None,
            "in_Z_m2_l": self.in_Z_m2_l,
            "balanced_irreducible": self.balanced_irreducible,
            "notes": list(self.notes),
        }


def _eliminate_u(phi: MultiPoly, equation: MultiPoly, method: str) -> MultiPoly:
    if equation.degree("u") == 0:
        # Res_u(phi, c) = c^{deg_u phi} for c free of u
        return equation ** phi.degree("u")
    return resultant(phi, equation, "u", method=method)


def eliminant(K: TwoBridgeKnot, method: str = "prs") -> MultiPoly:
    """``Res_u(phi, l s^k - Lambda)`` with ``s = m^2``, over (m, l)."""
    phi = riley_polynomial(K).phi.with_vars(("s", "l", "u"))
    equation = longitude_eigenvalue(K).as_equation()
    res = _eliminate_u(phi, equation, method)
    if not res:
        phi = squarefree_part(phi, "u").with_vars(("s", "l", "u"))
        res = _eliminate_u(phi, equation, method)
        if not res:
            raise ConventionError("resultant vanishes identically")
    m = MultiPoly.var("m").with_vars(("m", "l", "s"))
    return res.with_vars(("m", "l", "s")).subs({"s": m ** 2}).with_vars(ML)


def nonabelian_from_eliminant(E: MultiPoly) -> Tuple[MultiPoly, List[str]]:
    notes = []
    p = strip_monomial(E.primitive())
    p = remove_single_variable_factors(p, "m")
    p = remove_single_variable_factors(p, "l")
    p = squarefree_part(p).with_vars(ML)
    l1 = MultiPoly.parse("l - 1").with_vars(ML)
    while p.degree("l") > 0 and l1.divides(p):
        p = p.exquo(l1)
        notes.append("eliminant carried a factor l - 1, removed from Ahat")
    return normalize_sign(p), notes


def a_polynomial(K: TwoBridgeKnot, method: str = "prs", check_irreducible: bool = False) -> APolyReport:
    E = eliminant(K, method)
    ahat, notes = nonabelian_from_eliminant(E)
    A = normalize_sign(ahat * MultiPoly.parse("l - 1").with_vars(ML))
    report = APolyReport(
        knot=K,
        A=A,
        Ahat=ahat,
        m_degree=ahat.degree("m"),
        l_degree=ahat.degree("l"),
        balanced_cert=balanced_check(A),
        in_Z_m2_l=in_Z_m2_l(A),
        eliminant=E,
        notes=notes,
    )
    if check_irreducible and report.balanced_cert is not None and report.in_Z_m2_l:
        cert = balanced_check(ahat)
        if cert is not None:
            report.balanced_irreducible = is_balanced_irreducible(ahat, "Z[m^2,l]").irreducible
    return report


# ---------------------------------------------------------------------------
# symmetries


def in_Z_m2_l(p: MultiPoly, mvar: str = "m") -> bool:
    i = p.vars.index(mvar) if mvar in p.vars else None
    return p.is_integral() and (i is None or all(e[i] % 2 == 0 for e in p.terms))


def epsilon1_action(p: MultiPoly, mvar: str = "m") -> MultiPoly:
    """``m -> -m``."""
    return p.subs({mvar: -MultiPoly.var(mvar)}).with_vars(p.vars)


def sigma_action(p: MultiPoly, mvar: str = "m", lvar: str = "l") -> MultiPoly:
    """``P(1/m, 1/l)`` multiplied by the smallest monomial making it a polynomial."""
    if not p:
        raise ValueError("sigma action of zero polynomial")
    idx = [p.vars.index(v) if v in p.vars else None for v in (mvar, lvar)]
    tops = [max(e[i] for e in p.terms) if i is not None else 0 for i in idx]
    out = {}
    for e, c in p.terms.items():
        ne = list(e)
        for i, top in zip(idx, tops):
            if i is not None:
                ne[i] = top - e[i]
        out[tuple(ne)] = c
    return MultiPoly(out, p.vars)


def balanced_check(p: MultiPoly, mvar: str = "m", lvar: str = "l") -> Optional[Tuple[int, int, int]]:
    """``(delta, a, b)`` with ``P(1/m, 1/l) = delta m^a l^b P``, or ``None``."""
    q = sigma_action(p, mvar, lvar)
    idx = [p.vars.index(v) if v in p.vars else None for v in (mvar, lvar)]
    tops = [max(e[i] for e in p.terms) if i is not None else 0 for i in idx]
    lows = [min(e[i] for e in p.terms) if i is not None else 0 for i in idx]
    qlows = [min(e[i] for e in q.terms) if i is not None else 0 for i in idx]
    shift = [ql - pl for ql, pl in zip(qlows, lows)]
    e0, c0 = next(iter(p.terms.items()))
    shifted = {}
    for e, c in p.terms.items():
        ne = list(e)
        for i, sh in zip(idx, shift):
            if i is not None:
                ne[i] += sh
        shifted[tuple(ne)] = c
    ratio = None
    for e, c in shifted.items():
        qc = q.terms.get(e)
        if qc is None:
            return None
        r = qc / c if not isinstance(qc, int) or qc % c else qc // c
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    if len(shifted) != len(q.terms) or ratio not in (1, -1):
        return None
    # q = P(1/m,1/l) * m^{top_m} l^{top_l}
    a = shift[0] - tops[0]
    b = shift[1] - tops[1]
    return int(ratio), a, b


def is_balanced(p: MultiPoly, mvar: str = "m", lvar: str = "l") -> bool:
    return balanced_check(p, mvar, lvar) is not None


@dataclass
class BalancedIrreducibility:
    irreducible: bool
    witness: Optional[Tuple[MultiPoly, MultiPoly]] = None
    factors: List[Tuple[MultiPoly, int]] = field(default_factory=list)


RINGS = ("Z[m,l]", "Z[m^2,l]")


def _in_ring(p: MultiPoly, ring: str, mvar: str) -> bool:
    return p.is_integral() and (ring == "Z[m,l]" or in_Z_m2_l(p, mvar))


def is_balanced_irreducible(p: MultiPoly, ring: str = "Z[m^2,l]", mvar: str = "m",
                            lvar: str = "l") -> BalancedIrreducibility:
    """Decide whether ``p`` splits into two non-constant balanced factors in ``ring``."""
    if ring not in RINGS:
        raise ValueError(f"ring must be one of {RINGS}")
    if not is_balanced(p, mvar, lvar):
        raise ValueError("polynomial is not balanced")
    if not _in_ring(p, ring, mvar):
        raise ValueError(f"polynomial is not in {ring}")
    factors = factor_biv_Q(p)
    _, prim = p.content_primitive()
    one = MultiPoly.constant(1, p.vars)
    ranges = [range(k + 1) for _, k in factors]
    for choice in product(*ranges):
        if not any(choice) or all(c == k for c, (_, k) in zip(choice, factors)):
            continue
        part = one
        for (f, _), c in zip(factors, choice):
            part = part * f.with_vars(p.vars) ** c
        if part.is_constant():
            continue
        rest = prim.exquo(part)
        if rest.is_constant():
            continue
        if all(is_balanced(x, mvar, lvar) and _in_ring(x, ring, mvar) for x in (part, rest)):
            return BalancedIrreducibility(False, (part, rest), factors)
    return BalancedIrreducibility(True, None, factors)


def mirror_transform(p: MultiPoly, lvar: str = "l") -> MultiPoly:
    """``P(m, 1/l)`` cleared by the minimal power of l and sign-normalized."""
    i = p.vars.index(lvar)
    top = max(e[i] for e in p.terms)
    out = {}
    for e, c in p.terms.items():
        ne = list(e)
        ne[i] = top - e[i]
        out[tuple(ne)] = c
    return normalize_sign(MultiPoly(out, p.vars))


# ---------------------------------------------------------------------------
# trace field and degree bounds


@dataclass
class TraceFieldReport:
    knot: TwoBridgeKnot
    factor_degrees: List[Tuple[int, bool]]
    multiplicities: List[int]
    candidate_d: List[int]

    def to_json(self) -> dict:
        return {
            "knot": self.knot.name,
            "factor_degrees": [[d, nr] for d, nr in self.factor_degrees],
            "multiplicities": self.multiplicities,
            "candidate_d": self.candidate_d,
        }


def _dense(p: MultiPoly) -> List[int]:
    used = p.used_vars()
    if not used:
        return [p.constant_value()]
    i = p.vars.index(used[0])
    out = [0] * (p.degree() + 1)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def trace_field_degrees(K: TwoBridgeKnot) -> TraceFieldReport:
    if not K.is_hyperbolic:
        raise ValueError(f"{K.name} is a torus knot; the trace-field bound needs a hyperbolic knot")
    degrees, mults = [], []
    for f, k in factor_uni_Q(parabolic_polynomial(K)):
        degrees.append((f.degree(), has_nonreal_root(_dense(f))))
        mults.append(k)
    candidates = sorted({d for d, nonreal in degrees if nonreal})
    return TraceFieldReport(K, degrees, mults, candidates)


@dataclass
class DegreeBoundReport:
    knot: TwoBridgeKnot
    skipped: bool
    m_degree: Optional[int] = None
    l_degree: Optional[int] = None
    candidate_d: List[int] = field(default_factory=list)
    per_candidate: Dict[int, Tuple[bool, bool]] = field(default_factory=dict)
    at_least_two: Optional[bool] = None
    notice: str = ""

    @property
    def passed(self) -> bool:
        return self.skipped or (bool(self.at_least_two) and all(m and l for m, l in self.per_candidate.values()))

    def to_json(self) -> dict:
        return {
            "knot": self.knot.name,
            "skipped": self.skipped,
            "m_degree": self.m_degree,
            "l_degree": self.l_degree,
            "candidate_d": self.candidate_d,
            "per_candidate": {str(d): {"m": m, "l": l} for d, (m, l) in self.per_candidate.items()},
            "at_least_two": self.at_least_two,
            "passed": self.passed,
            "notice": self.notice,
        }


def degree_bound_check(K: TwoBridgeKnot, report: Optional[APolyReport] = None) -> DegreeBoundReport:
    """Compare both degrees of Ahat with every candidate trace-field degree."""
    if not K.is_hyperbolic:
        return DegreeBoundReport(K, skipped=True, notice=f"{K.name} is a torus knot; skipped")
    report = report or a_polynomial(K)
    tf = trace_field_degrees(K)
    out = DegreeBoundReport(K, False, report.m_degree, report.l_degree, tf.candidate_d)
    for d in tf.candidate_d:
        out.per_candidate[d] = (report.m_degree >= d, report.l_degree >= d)
    out.at_least_two = report.m_degree >= 2 and report.l_degree >= 2
    return out


# ---------------------------------------------------------------------------
# numerical longitude check


def longitude_residual(K: TwoBridgeKnot, s0, u0, dps: int = 40) -> float:
    """``max |rho(lambda) rho(a) - rho(a) rho(lambda)|`` at a numeric point."""
    with mpmath.workdps(dps):
        s0, u0 = mpmath.mpc(s0), mpmath.mpc(u0)
        lam = numeric_word(longitude_word(K), s0, u0)
        a = _numeric_letter("a", 1, s0, u0)
        return _max_abs(lam * a - a * lam)
