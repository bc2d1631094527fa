"""NumPy implementations of the compiled kernels (same signatures and results)."""

from __future__ import annotations

import numpy as np


def echelon_mod_p(A, p, stop_when_full=True):
    A = np.asarray(A, dtype=np.int64) % p
    ncols = A.shape[1]
    basis = np.zeros((ncols, ncols), dtype=np.int64)
    slot = np.full(ncols, -1, dtype=np.int64)
    rank = 0
    for i in range(A.shape[0]):
        row = A[i].copy()
        lead = -1
        nz = np.flatnonzero(row)
        while nz.size:
            c = nz[0]
            if slot[c] < 0:
                lead = c
                break
            row = (row - row[c] * basis[slot[c]]) % p
            nz = np.flatnonzero(row)
        if lead < 0:
            continue
        inv = pow(int(row[lead]), p - 2, p)
        basis[rank] = row * inv % p
        slot[lead] = rank
        rank += 1
        if stop_when_full and rank == ncols:
            break
    pivots = [c for c in range(ncols) if slot[c] >= 0]
    order = [slot[c] for c in pivots]
    return (basis[order, :] if rank else np.zeros((0, ncols), dtype=np.int64)), pivots


def _chunks(d, P, budget=1 << 22):
    width = max(1, min(d, budget // max(1, d * P)))
    for start in range(0, d, width):
        yield np.arange(start, min(d, start + width))


def statesum_mod_p(indptr, tgt, cid, coef, diag, p):
    indptr = np.asarray(indptr)
    d, P = diag.shape
    acc = np.zeros(P, dtype=np.int64)
    for cols in _chunks(d, P):
        w = len(cols)
        cur = np.zeros((d, w, P), dtype=np.int64)
        cur[cols, np.arange(w), :] = 1
        for k in range(indptr.shape[0]):
            nxt = np.zeros_like(cur)
            live = np.flatnonzero(cur.any(axis=(1, 2)))
            for src in live:
                vec = cur[src]
                for e in range(indptr[k, src], indptr[k, src + 1]):
                    t = tgt[e]
                    nxt[t] = (nxt[t] + coef[cid[e]][None, :] * vec) % p
            cur = nxt
        diagonal = cur[cols, np.arange(w), :]
        acc = (acc + (diagonal * diag[cols] % p).sum(axis=0)) % p
    return acc


def statesum_bounds(indptr, tgt, cid, cmin, cmax, cnorm, dexp):
    indptr = np.asarray(indptr)
    d = len(dexp)
    big = 1 << 60
    lo = np.full((d, d), big, dtype=np.int64)
    hi = np.full((d, d), -big, dtype=np.int64)
    nm = np.zeros((d, d), dtype=np.float64)
    idx = np.arange(d)
    lo[idx, idx] = 0
    hi[idx, idx] = 0
    nm[idx, idx] = 1.0
    for k in range(indptr.shape[0]):
        lo2 = np.full_like(lo, big)
        hi2 = np.full_like(hi, -big)
        nm2 = np.zeros_like(nm)
        for src in range(d):
            live = nm[src] > 0
            if not live.any():
                continue
            for e in range(indptr[k, src], indptr[k, src + 1]):
                t, q = tgt[e], cid[e]
                cand_lo = np.where(live, lo[src] + cmin[q], big)
                cand_hi = np.where(live, hi[src] + cmax[q], -big)
                np.minimum(lo2[t], cand_lo, out=lo2[t])
                np.maximum(hi2[t], cand_hi, out=hi2[t])
                nm2[t] += nm[src] * cnorm[q]
        lo, hi, nm = lo2, hi2, nm2
    diag_norm = nm[idx, idx]
    live = diag_norm > 0
    if not live.any():
        return big, -big, 0.0
    glo = int((lo[idx, idx] + dexp)[live].min())
    ghi = int((hi[idx, idx] + dexp)[live].max())
    return glo, ghi, float(diag_norm.sum())
