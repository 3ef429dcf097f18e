"""Numba-jitted implementations of the hot kernels.

Same contracts as :mod:`aircast.kernels.numpy_backend`; see there for the
layout conventions. The inner loops run over the trailing (contiguous)
filter axis so LLVM can vectorize them.
"""

import numpy as np
from numba import njit

NAME = "numba"

_OPTS = {"cache": True, "nogil": True}


@njit(fastmath=True, **_OPTS)
def conv2d_forward(x, w, b):
    B, H, W, C = x.shape
    kh, kw, _, F = w.shape
    ph = kh // 2
    pw = kw // 2
    out = np.empty((B, H, W, F))
    acc = np.empty(F)
    for n in range(B):
        for i in range(H):
            for j in range(W):
                for f in range(F):
                    acc[f] = b[f]
                for u in range(kh):
                    ii = i + u - ph
                    if ii < 0 or ii >= H:
                        continue
                    for v in range(kw):
                        jj = j + v - pw
                        if jj < 0 or jj >= W:
                            continue
                        for c in range(C):
                            xv = x[n, ii, jj, c]
                            for f in range(F):
                                acc[f] += xv * w[u, v, c, f]
                for f in range(F):
                    out[n, i, j, f] = acc[f]
    return out


@njit(fastmath=True, **_OPTS)
def conv2d_backward(x, w, dy):
    B, H, W, C = x.shape
    kh, kw, _, F = w.shape
    ph = kh // 2
    pw = kw // 2
    dx = np.zeros((B, H, W, C))
    dw = np.zeros((kh, kw, C, F))
    db = np.zeros(F)
    for n in range(B):
        for i in range(H):
            for j in range(W):
                for f in range(F):
                    db[f] += dy[n, i, j, f]
                for u in range(kh):
                    ii = i + u - ph
                    if ii < 0 or ii >= H:
                        continue
                    for v in range(kw):
                        jj = j + v - pw
                        if jj < 0 or jj >= W:
                            continue
                        for c in range(C):
                            xv = x[n, ii, jj, c]
                            s = 0.0
                            for f in range(F):
                                g = dy[n, i, j, f]
                                dw[u, v, c, f] += xv * g
                                s += w[u, v, c, f] * g
                            dx[n, ii, jj, c] += s
    return dx, dw, db


@njit(**_OPTS)
def maxpool2_forward(x):
    B, H, W, C = x.shape
    h = H // 2
    w = W // 2
    out = np.empty((B, h, w, C))
    arg = np.empty((B, h, w, C), dtype=np.int64)
    for n in range(B):
        for i in range(h):
            for j in range(w):
                for c in range(C):
                    best = x[n, 2 * i, 2 * j, c]
                    k = 0
                    v = x[n, 2 * i, 2 * j + 1, c]
                    if v > best:
                        best = v
                        k = 1
                    v = x[n, 2 * i + 1, 2 * j, c]
                    if v > best:
                        best = v
                        k = 2
                    v = x[n, 2 * i + 1, 2 * j + 1, c]
                    if v > best:
                        best = v
                        k = 3
                    out[n, i, j, c] = best
                    arg[n, i, j, c] = k
    return out, arg


@njit(**_OPTS)
def maxpool2_backward(dy, arg):
    B, h, w, C = dy.shape
    dx = np.zeros((B, 2 * h, 2 * w, C))
    for n in range(B):
        for i in range(h):
            for j in range(w):
                for c in range(C):
                    k = arg[n, i, j, c]
                    dx[n, 2 * i + k // 2, 2 * j + k % 2, c] = dy[n, i, j, c]
    return dx


# no fastmath: the sums must accumulate exactly in record order
@njit(**_OPTS)
def grid_accumulate(bucket_idx, rows, cols, values, n_buckets, n_rows, n_cols):
    sums = np.zeros((n_buckets, n_rows, n_cols))
    counts = np.zeros((n_buckets, n_rows, n_cols), dtype=np.int64)
    for k in range(values.size):
        sums[bucket_idx[k], rows[k], cols[k]] += values[k]
        counts[bucket_idx[k], rows[k], cols[k]] += 1
    return sums, counts
