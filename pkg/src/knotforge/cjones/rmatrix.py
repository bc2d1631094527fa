"""The braiding on V_n (x) V_n for quantum sl2 with q = t^4.

Basis ``e_0 .. e_{n-1}`` of V_n with weights ``lam_i = n - 1 - 2i``;
``K e_i = v^{lam_i} e_i`` with ``v = t^2``, ``F e_i = [i+1] e_{i+1}``,
``E e_i = [n-i] e_{i-1}``.  The braiding is ``P o R`` for the universal
``R = v^{H (x) H / 2} sum_k v^{k(k-1)/2} (v - 1/v)^k / [k]! E^k (x) F^k``,
which gives::

    c(e_i (x) e_j) = sum_k C_k e_{j+k} (x) e_{i-k}
    C_k = t^{lam_{i-k} lam_{j+k} + k(k-1)} prod_{r<=k} (v^r - v^-r)
          * binom_v(n-i+k-1, k) * binom_v(j+k, k)

All exponents below are exponents of t.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Tuple

from ..exactalg.laurent import LaurentPoly

Transition = Tuple[Tuple[int, int], LaurentPoly]


@lru_cache(maxsize=None)
def gaussian_binomial(a: int, k: int) -> LaurentPoly:
    """Balanced Gaussian binomial ``[a, k]`` in ``v = t^2``."""
    if k < 0 or k > a:
        return LaurentPoly({})
    if k == 0 or k == a:
        return LaurentPoly({0: 1})
    # [a,k] = v^{-k} [a-1,k] + v^{a-k} [a-1,k-1]
    return gaussian_binomial(a - 1, k).shift(-2 * k) + gaussian_binomial(a - 1, k - 1).shift(2 * (a - k))


@lru_cache(maxsize=None)
def _bracket_product(k: int) -> LaurentPoly:
    """``prod_{r=1}^k (v^r - v^{-r})``."""
    out = LaurentPoly({0: 1})
    for r in range(1, k + 1):
        out = out * LaurentPoly({2 * r: 1, -2 * r: -1})
    return out


def weights(n: int) -> List[int]:
    return [n - 1 - 2 * i for i in range(n)]


@lru_cache(maxsize=None)
def braiding(n: int, inverse: bool = False) -> Dict[Tuple[int, int], Tuple[Transition, ...]]:
    """Sparse braiding ``(i, j) -> ((i', j'), coefficient)`` on V_n (x) V_n."""
    lam = weights(n)
    out = {}
    for i in range(n):
        for j in range(n):
            terms = []
            if not inverse:
                for k in range(min(i, n - 1 - j) + 1):
                    c = (_bracket_product(k)
                         * gaussian_binomial(n - i + k - 1, k)
                         * gaussian_binomial(j + k, k)).shift(lam[i - k] * lam[j + k] + k * (k - 1))
                    terms.append(((j + k, i - k), c))
            else:
                for k in range(min(j, n - 1 - i) + 1):
                    c = (_bracket_product(k)
                         * gaussian_binomial(n - j + k - 1, k)
                         * gaussian_binomial(i + k, k)).shift(-lam[i] * lam[j] - k * (k - 1))
                    if k % 2:
                        c = -c
                    terms.append(((j - k, i + k), c))
            out[(i, j)] = tuple(terms)
    return out


def twist_exponent(n: int) -> int:
    """The ribbon twist on V_n is ``t^{n^2 - 1}``."""
    return n * n - 1


def apply_on_tensor(vec: Dict[tuple, LaurentPoly], letter: int, n: int) -> Dict[tuple, LaurentPoly]:
    """Apply ``sigma_{|letter|}^{+-1}`` to a sparse vector on V_n^{(x) k}."""
    table = braiding(n, letter < 0)
    a = abs(letter) - 1
    out: Dict[tuple, LaurentPoly] = {}
    for state, coeff in vec.items():
        for (x, y), c in table[(state[a], state[a + 1])]:
            new = state[:a] + (x, y) + state[a + 2:]
            val = out.get(new)
            out[new] = coeff * c if val is None else val + coeff * c
    return {s: c for s, c in out.items() if c}
