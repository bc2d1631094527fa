"""Resultants by subresultant PRS and by Sylvester determinant.

Both work over any coefficient ring made of :class:`MultiPoly` in the other
variables.  The two routes share nothing but :meth:`MultiPoly.exquo`, which is
what lets one check the other.
"""

from __future__ import annotations

from typing import List

from .poly import MultiPoly


def _check(a: MultiPoly, b: MultiPoly, var: str):
    if a.degree(var) <= 0 or b.degree(var) <= 0:
        raise ValueError(f"resultant needs positive degree in {var}")


def resultant(a: MultiPoly, b: MultiPoly, var: str, method: str = "prs") -> MultiPoly:
    """``Res_var(a, b)``, a polynomial free of ``var``.

    ``method`` is ``"prs"`` (subresultant pseudo-remainder sequence) or
    ``"sylvester"`` (fraction-free Bareiss determinant).
    """
    _check(a, b, var)
    a, b = MultiPoly._align(a, b)
    if method == "prs":
        return _subresultant(a, b, var)
    if method == "sylvester":
        return bareiss_det(sylvester_matrix(a, b, var))
    raise ValueError(f"unknown resultant method {method!r}")


def _subresultant(A: MultiPoly, B: MultiPoly, x: str) -> MultiPoly:
    vars = A.vars
    one = MultiPoly.constant(1, vars)
    s = 1
    if A.degree(x) < B.degree(x):
        A, B = B, A
        if A.degree(x) % 2 and B.degree(x) % 2:
            s = -1
    g = one
    h = one
    while True:
        da, db = A.degree(x), B.degree(x)
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = A.pseudo_rem(B, x)
        if not R:
            return MultiPoly({}, vars)
        A = B
        B = R.exquo(g * h ** delta)
        g = A.lc_in(x)
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g ** delta).exquo(h ** (delta - 1))
        if B.degree(x) <= 0:
            break
    da = A.degree(x)
    lb = B.lc_in(x)
    if da == 0:
        res = one
    elif da == 1:
        res = lb
    else:
        res = (lb ** da).exquo(h ** (da - 1))
    return res * s


def sylvester_matrix(a: MultiPoly, b: MultiPoly, var: str) -> List[List[MultiPoly]]:
    m, n = a.degree(var), b.degree(var)
    zero = MultiPoly({}, a.vars)
    ca = a.coefficients_in(var)
    cb = b.coefficients_in(var)
    rows = []
    size = m + n
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = ca.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = cb.get(k, zero)
        rows.append(row)
    return rows


def bareiss_det(mat: List[List[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant (every division is exact)."""
    n = len(mat)
    if n == 0:
        return MultiPoly.constant(1)
    M = [list(r) for r in mat]
    vars = M[0][0].vars
    sign = 1
    prev = MultiPoly.constant(1, vars)
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MultiPoly({}, vars)
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * pivot - M[i][k] * M[k][j]
                M[i][j] = num.exquo(prev) if prev != 1 else num
            M[i][k] = MultiPoly({}, vars)
        prev = pivot
    return M[n - 1][n - 1] * sign
