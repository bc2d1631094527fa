# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: modular row echelon and braid state sums.

All modular arithmetic assumes ``p < 2**31`` so that ``a + b * c`` fits in a
signed 64-bit integer for reduced ``a, b, c``.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport INFINITY

ctypedef cnp.int64_t i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 r = 1, e = p - 2
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


def echelon_mod_p(const i64[:, :] A, i64 p, bint stop_when_full=True):
    """Row-echelon basis of the row space of ``A`` mod ``p``.

    Rows are inserted one at a time; with ``stop_when_full`` the scan ends as
    soon as the rank reaches the column count.  Returns ``(basis, pivots)``
    where ``basis[i]`` has a 1 in column ``pivots[i]`` and zeros in all
    earlier pivot columns.
    """
    cdef Py_ssize_t nrows = A.shape[0], ncols = A.shape[1]
    cdef i64[:, ::1] B = np.zeros((ncols, ncols), dtype=np.int64)
    cdef i64[::1] slot = np.full(ncols, -1, dtype=np.int64)   # column -> basis row
    cdef i64[::1] row = np.zeros(ncols, dtype=np.int64)
    cdef Py_ssize_t i, j, c, rank = 0, lead
    cdef i64 f, inv, b
    for i in range(nrows):
        for j in range(ncols):
            row[j] = A[i, j] % p
            if row[j] < 0:
                row[j] += p
        lead = -1
        for c in range(ncols):
            f = row[c]
            if f == 0:
                continue
            if slot[c] < 0:
                lead = c
                break
            b = slot[c]
            for j in range(c, ncols):
                if B[b, j]:
                    row[j] = (row[j] - f * B[b, j]) % p
                    if row[j] < 0:
                        row[j] += p
        if lead < 0:
            continue
        inv = _inv(row[lead], p)
        for j in range(lead, ncols):
            B[rank, j] = row[j] * inv % p
        slot[lead] = rank
        rank += 1
        if stop_when_full and rank == ncols:
            break
    pivots = [c for c in range(ncols) if slot[c] >= 0]
    order = [slot[c] for c in pivots]
    basis = np.asarray(B)[order, :] if rank else np.zeros((0, ncols), dtype=np.int64)
    return basis, pivots


def statesum_mod_p(const i64[:, :] indptr, const i64[:] tgt, const i64[:] cid,
                   const i64[:, :] coef, const i64[:, :] diag, i64 p):
    """Trace of a product of sparse block operators at ``P`` points mod ``p``.

    ``indptr[k]`` is the CSR row pointer of letter ``k`` (global offsets into
    ``tgt``/``cid``); a transition sends basis state ``src`` to ``tgt`` with
    coefficient row ``coef[cid]``.  Returns ``sum_c diag[c] * (B e_c)[c]``.
    """
    cdef Py_ssize_t L = indptr.shape[0], d = diag.shape[0], P = diag.shape[1]
    cdef i64[:, ::1] cur = np.zeros((d, P), dtype=np.int64)
    cdef i64[:, ::1] nxt = np.zeros((d, P), dtype=np.int64)
    cdef i64[:, ::1] tmp
    cdef char[::1] live = np.zeros(d, dtype=np.int8)
    cdef char[::1] live2 = np.zeros(d, dtype=np.int8)
    cdef char[::1] ltmp
    cdef i64[::1] acc = np.zeros(P, dtype=np.int64)
    cdef Py_ssize_t c, k, src, e, t, j, q
    cdef i64 x
    for c in range(d):
        for src in range(d):
            live[src] = 0
            for j in range(P):
                cur[src, j] = 0
        live[c] = 1
        for j in range(P):
            cur[c, j] = 1
        for k in range(L):
            for src in range(d):
                live2[src] = 0
                for j in range(P):
                    nxt[src, j] = 0
            for src in range(d):
                if not live[src]:
                    continue
                for e in range(indptr[k, src], indptr[k, src + 1]):
                    t = tgt[e]
                    q = cid[e]
                    live2[t] = 1
                    for j in range(P):
                        nxt[t, j] = (nxt[t, j] + coef[q, j] * cur[src, j]) % p
            tmp = cur
            cur = nxt
            nxt = tmp
            ltmp = live
            live = live2
            live2 = ltmp
        if live[c]:
            for j in range(P):
                acc[j] = (acc[j] + cur[c, j] * diag[c, j]) % p
    return np.asarray(acc)


def statesum_bounds(const i64[:, :] indptr, const i64[:] tgt, const i64[:] cid,
                    const i64[:] cmin, const i64[:] cmax, const double[:] cnorm,
                    const i64[:] dexp):
    """Exponent range and coefficient 1-norm bound of the same trace.

    Coefficients are tracked as (min exponent, max exponent, 1-norm); the
    diagonal weights are monomials ``t**dexp``.  Returns ``(lo, hi, norm)``;
    ``lo > hi`` means every diagonal entry vanishes structurally.
    """
    cdef Py_ssize_t L = indptr.shape[0], d = dexp.shape[0]
    cdef i64 BIG = 1 << 60
    cdef i64[::1] lo = np.zeros(d, dtype=np.int64)
    cdef i64[::1] hi = np.zeros(d, dtype=np.int64)
    cdef double[::1] nm = np.zeros(d, dtype=np.float64)
    cdef i64[::1] lo2 = np.zeros(d, dtype=np.int64)
    cdef i64[::1] hi2 = np.zeros(d, dtype=np.int64)
    cdef double[::1] nm2 = np.zeros(d, dtype=np.float64)
    cdef i64[::1] ti
    cdef double[::1] td
    cdef i64 glo = BIG, ghi = -BIG
    cdef double gnorm = 0.0
    cdef Py_ssize_t c, k, src, e, t, q
    for c in range(d):
        for src in range(d):
            lo[src] = BIG
            hi[src] = -BIG
            nm[src] = 0.0
        lo[c] = 0
        hi[c] = 0
        nm[c] = 1.0
        for k in range(L):
            for src in range(d):
                lo2[src] = BIG
                hi2[src] = -BIG
                nm2[src] = 0.0
            for src in range(d):
                if nm[src] == 0.0:
                    continue
                for e in range(indptr[k, src], indptr[k, src + 1]):
                    t = tgt[e]
                    q = cid[e]
                    if lo[src] + cmin[q] < lo2[t]:
                        lo2[t] = lo[src] + cmin[q]
                    if hi[src] + cmax[q] > hi2[t]:
                        hi2[t] = hi[src] + cmax[q]
                    nm2[t] += nm[src] * cnorm[q]
            ti = lo; lo = lo2; lo2 = ti
            ti = hi; hi = hi2; hi2 = ti
            td = nm; nm = nm2; nm2 = td
        if nm[c] > 0.0:
            if lo[c] + dexp[c] < glo:
                glo = lo[c] + dexp[c]
            if hi[c] + dexp[c] > ghi:
                ghi = hi[c] + dexp[c]
            gnorm += nm[c]
    return int(glo), int(ghi), float(gnorm)
