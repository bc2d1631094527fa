"""Dense univariate polynomials as coefficient lists (lowest degree first).

Integer/rational helpers and arithmetic in ``F_p[x]`` and ``(Z/mZ)[x]``.
Lists never carry trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

Poly = List[int]


def strip(a: Sequence) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def deg(a: Sequence) -> int:
    return len(a) - 1


def add(a, b):
    n = max(len(a), len(b))
    return strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b):
    n = max(len(a), len(b))
    return strip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip(out)


def scale(a, c):
    return strip([x * c for x in a])


def derivative(a):
    return strip([i * a[i] for i in range(1, len(a))])


def evaluate(a, x):
    r = 0
    for c in reversed(a):
        r = r * x + c
    return r


def content(a) -> int:
    return reduce(gcd, (abs(int(c)) for c in a), 0)


def primitive(a) -> Poly:
    """Primitive integer polynomial with positive leading coefficient."""
    a = strip(a)
    if not a:
        return []
    if any(isinstance(c, Fraction) and c.denominator != 1 for c in a):
        den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(c).denominator for c in a))
        a = [int(Fraction(c) * den) for c in a]
    a = [int(c) for c in a]
    c = content(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def divmod_q(a, b) -> Tuple[list, list]:
    """Division over Q."""
    a = [Fraction(x) for x in a]
    b = strip(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lb
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = strip(a)
    return strip(q), a


def exact_div_z(a, b) -> Poly:
    """Exact quotient in Z[x]; raises ``ValueError`` if not exact or not integral."""
    a = list(a)
    b = strip(b)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while a and len(a) >= len(b):
        k = len(a) - len(b)
        c, r = divmod(a[-1], lb)
        if r:
            raise ValueError("not divisible over Z")
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = strip(a)
    if a:
        raise ValueError("not divisible over Z")
    return strip(q)


def divides_z(b, a) -> bool:
    try:
        exact_div_z(a, b)
        return True
    except ValueError:
        return False


def gcd_z(a, b) -> Poly:
    """Primitive gcd in Z[x] (primitive PRS)."""
    a, b = primitive(a), primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        _, r = divmod_q(a, b)
        a, b = b, primitive(r)
    if not b:
        return primitive(a)
    return [1]


def squarefree_decomposition(f) -> List[Tuple[Poly, int]]:
    """Yun's algorithm on a primitive integer polynomial: ``f = prod g_i^i``."""
    f = primitive(f)
    out = []
    if len(f) <= 1:
        return out
    fp = derivative(f)
    a = gcd_z(f, fp)
    b = exact_div_z(f, a) if len(a) > 1 else f
    c = exact_div_z(fp, a) if len(a) > 1 else fp
    # work over Q to avoid content bookkeeping; renormalize at the end
    b = [Fraction(x) for x in b]
    c = [Fraction(x) for x in c]
    d = sub(c, derivative(b))
    i = 1
    while len(b) > 1:
        g = gcd_z(primitive(b), primitive(d)) if d else primitive(b)
        if len(g) > 1:
            out.append((g, i))
        b = divmod_q(b, g)[0]
        c = divmod_q(d, g)[0] if d else []
        d = sub(c, derivative(b))
        i += 1
    return out


# ---------------------------------------------------------------------------
# arithmetic modulo an integer m (p prime for inverses)


def mod(a, m):
    return strip([x % m for x in a])


def sym(a, m):
    """Symmetric representatives in (-m/2, m/2]."""
    h = m // 2
    return strip([(x % m) - m if (x % m) > h else (x % m) for x in a])


def mul_mod(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip([x % m for x in out])


def divmod_mod(a, b, m):
    """Division by ``b`` whose leading coefficient is invertible mod ``m``."""
    a = [x % m for x in a]
    a = strip(a)
    b = strip([x % m for x in b])
    inv = pow(b[-1], -1, m)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while a and len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] * inv % m
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] = (a[i + k] - c * y) % m
        a = strip(a)
    return strip(q), a


def rem_mod(a, b, m):
    return divmod_mod(a, b, m)[1]


def monic_mod(a, p):
    a = strip([x % p for x in a])
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def gcd_mod(a, b, p):
    a = strip([x % p for x in a])
    b = strip([x % p for x in b])
    while b:
        a, b = b, rem_mod(a, b, p)
    return monic_mod(a, p) if a else []


def xgcd_mod(a, b, p):
    """``(g, s, t)`` with ``s a + t b = g`` monic, over F_p."""
    r0, r1 = strip([x % p for x in a]), strip([x % p for x in b])
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_mod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, mod(sub(s0, mul(q, s1)), p)
        t0, t1 = t1, mod(sub(t0, mul(q, t1)), p)
    inv = pow(r0[-1], -1, p)
    return [x * inv % p for x in r0], [x * inv % p for x in s0], [x * inv % p for x in t0]


def powmod_poly(base, e, f, p):
    result = [1]
    base = rem_mod(base, f, p)
    while e:
        if e & 1:
            result = rem_mod(mul_mod(result, base, p), f, p)
        e >>= 1
        if e:
            base = rem_mod(mul_mod(base, base, p), f, p)
    return result


def xgcd_q(a, b):
    """``(g, s, t)`` with ``s a + t b = g`` monic, over Q."""
    r0, r1 = [Fraction(x) for x in strip(a)], [Fraction(x) for x in strip(b)]
    s0, s1, t0, t1 = [Fraction(1)], [], [], [Fraction(1)]
    while r1:
        q, r = divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    lc = r0[-1]
    return [x / lc for x in r0], [x / lc for x in s0], [x / lc for x in t0]
