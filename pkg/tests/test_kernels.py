import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from knotforge import kernels
from knotforge.cjones import BraidWord, colored_jones

from conftest import FIGURE_EIGHT

P = 2 ** 31 - 1

needs_compiled = pytest.mark.skipif(kernels.compiled_backend is None, reason="compiled kernels not built")


def _rank_via_fractions(A, p):
    M = [list(map(int, row)) for row in A]
    rank, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c] % p:
                f = M[r][c]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


matrices = arrays(np.int64, st.tuples(st.integers(1, 7), st.integers(1, 7)), elements=st.integers(-3, 3))


@settings(max_examples=60, deadline=None)
@given(matrices, st.sampled_from([7, 101, P]))
def test_python_echelon_rank(A, p):
    basis, pivots = kernels.python_backend.echelon_mod_p(A, p, False)
    assert len(pivots) == _rank_via_fractions(A, p)
    for row, c in zip(basis, pivots):
        assert row[c] == 1 and not row[:c].any()


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(matrices, st.sampled_from([7, 101, P]), st.booleans())
def test_echelon_backends_agree(A, p, stop):
    a_basis, a_piv = kernels.python_backend.echelon_mod_p(A, p, stop)
    b_basis, b_piv = kernels.compiled_backend.echelon_mod_p(A % p, p, stop)
    assert list(a_piv) == list(b_piv)
    assert np.array_equal(np.asarray(a_basis), np.asarray(b_basis))


@needs_compiled
@pytest.mark.parametrize("braid,n", [(FIGURE_EIGHT, 3), (BraidWord(3, (1, 1, 1, 2, -1, 2)), 3),
                                     (BraidWord(4, (1, 1, 2, -1, -3, 2, -3)), 2)])
def test_statesum_backends_agree(braid, n, monkeypatch):
    compiled = colored_jones(braid, n)
    for name in ("echelon_mod_p", "statesum_mod_p", "statesum_bounds"):
        monkeypatch.setattr(kernels, name, getattr(kernels.python_backend, name))
    assert colored_jones(braid, n) == compiled


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
