"""Pure-numpy implementations of the hot kernels.

This is the fallback path used when numba is unavailable or when
``AIRCAST_BACKEND=numpy`` is set. Layouts are channels-last:
images ``(B, H, W, C)``, conv weights ``(kh, kw, C, F)``.
"""

import numpy as np

NAME = "numpy"


def conv2d_forward(x, w, b):
    """SAME-padded cross-correlation, one batched matmul per kernel tap."""
    B, H, W, C = x.shape
    kh, kw, _, F = w.shape
    ph, pw = kh // 2, kw // 2
    xp = np.pad(x, ((0, 0), (ph, ph), (pw, pw), (0, 0)))
    out = np.zeros((B, H, W, F))
    for u in range(kh):
        for v in range(kw):
            out += xp[:, u:u + H, v:v + W, :] @ w[u, v]
    out += b
    return out


def conv2d_backward(x, w, dy):
    """Gradients of conv2d_forward w.r.t. input, weights and bias."""
    B, H, W, C = x.shape
    kh, kw, _, F = w.shape
    ph, pw = kh // 2, kw // 2
    xp = np.pad(x, ((0, 0), (ph, ph), (pw, pw), (0, 0)))

    db = dy.sum(axis=(0, 1, 2))
    dw = np.empty_like(w)
    dxp = np.zeros_like(xp)
    dy_flat = dy.reshape(-1, F)
    for u in range(kh):
        for v in range(kw):
            patch = xp[:, u:u + H, v:v + W, :].reshape(-1, C)
            dw[u, v] = patch.T @ dy_flat
            dxp[:, u:u + H, v:v + W, :] += dy @ w[u, v].T
    dx = dxp[:, ph:ph + H, pw:pw + W, :]
    return np.ascontiguousarray(dx), dw, db


def maxpool2_forward(x):
    """2x2 max pooling; returns (pooled, argmax) with argmax in {0..3}.

    The argmax index is row-major within the block, and ties resolve to
    the first maximal element.
    """
    B, H, W, C = x.shape
    h, w = H // 2, W // 2
    blocks = (
        x.reshape(B, h, 2, w, 2, C)
        .transpose(0, 1, 3, 5, 2, 4)
        .reshape(B, h, w, C, 4)
    )
    arg = blocks.argmax(axis=-1)
    out = np.take_along_axis(blocks, arg[..., None], axis=-1)[..., 0]
    return np.ascontiguousarray(out), arg


def maxpool2_backward(dy, arg):
    """Route each upstream gradient to its block's argmax position."""
    B, h, w, C = dy.shape
    scattered = np.zeros((B, h, w, C, 4))
    np.put_along_axis(scattered, arg[..., None], dy[..., None], axis=-1)
    dx = (
        scattered.reshape(B, h, w, C, 2, 2)
        .transpose(0, 1, 4, 2, 5, 3)
        .reshape(B, 2 * h, 2 * w, C)
    )
    return np.ascontiguousarray(dx)


def grid_accumulate(bucket_idx, rows, cols, values, n_buckets, n_rows, n_cols):
    """Accumulate per-(bucket, cell) sums and counts in record order."""
    sums = np.zeros((n_buckets, n_rows, n_cols))
    counts = np.zeros((n_buckets, n_rows, n_cols), dtype=np.int64)
    flat = (bucket_idx * n_rows + rows) * n_cols + cols
    np.add.at(sums.reshape(-1), flat, values)
    np.add.at(counts.reshape(-1), flat, 1)
    return sums, counts
