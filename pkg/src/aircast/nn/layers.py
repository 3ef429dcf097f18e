"""Layer primitives: SAME-padded conv, 2x2 max-pool, dense, flatten.

Everything is float64. Images are channels-last ``(B, H, W, C)``; dense
weights are ``(in, out)``. Each layer caches what its backward pass needs
when ``forward(..., train=True)`` is called.
"""

import math

import numpy as np

from .. import kernels
from ..errors import NoForwardCacheError, OddDimensionError, ShapeMismatchError


def glorot_uniform(rng, shape, fan_in, fan_out):
    """Uniform init in [-s, s] with s = sqrt(6 / (fan_in + fan_out))."""
    s = math.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-s, s, size=shape)


def relu(x):
    return np.maximum(x, 0.0)


def _as_batch(x, rank):
    """Promote a single sample to a batch of one; report whether it was."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == rank - 1:
        return x[None, ...], True
    if x.ndim != rank:
        raise ShapeMismatchError(f"expected {rank - 1}D or {rank}D input, got {x.ndim}D")
    return x, False


class Layer:
    """Minimal layer interface; parameter-free layers keep the defaults."""

    def forward(self, x, train=False):
        raise NotImplementedError

    def backward(self, grad):
        raise NotImplementedError

    def params(self):
        return []

    def grads(self):
        return []

    def param_names(self):
        return []


class Conv2D(Layer):
    """SAME-padded cross-correlation with per-filter bias."""

    def __init__(self, in_channels, out_channels, kernel_size=3, rng=None):
        if kernel_size % 2 == 0:
            raise ShapeMismatchError("SAME padding requires an odd-sided kernel")
        rng = rng or np.random.default_rng(0)
        k = kernel_size
        fan_in = k * k * in_channels
        fan_out = k * k * out_channels
        self.w = glorot_uniform(rng, (k, k, in_channels, out_channels), fan_in, fan_out)
        self.b = np.zeros(out_channels)
        self._x = None
        self.dw = None
        self.db = None

    def forward(self, x, train=False):
        if x.shape[-1] != self.w.shape[2]:
            raise ShapeMismatchError(
                f"input has {x.shape[-1]} channels, kernel expects {self.w.shape[2]}"
            )
        x = np.ascontiguousarray(x, dtype=np.float64)
        if train:
            self._x = x
        return kernels.active.conv2d_forward(x, self.w, self.b)

    def backward(self, grad):
        if self._x is None:
            raise NoForwardCacheError("Conv2D.backward called before forward(train=True)")
        dx, self.dw, self.db = kernels.active.conv2d_backward(
            self._x, self.w, np.ascontiguousarray(grad)
        )
        return dx

    def params(self):
        return [self.w, self.b]

    def grads(self):
        return [self.dw, self.db]

    def param_names(self):
        return ["w", "b"]


class MaxPool2(Layer):
    """2x2 max pooling; backward routes gradients to the block argmax."""

    def __init__(self):
        self._arg = None

    def forward(self, x, train=False):
        B, H, W, C = x.shape
        if H % 2 or W % 2:
            raise OddDimensionError(f"2x2 pooling needs even spatial dims, got {H}x{W}")
        out, arg = kernels.active.maxpool2_forward(np.ascontiguousarray(x))
        if train:
            self._arg = arg
        return out

    def backward(self, grad):
        if self._arg is None:
            raise NoForwardCacheError("MaxPool2.backward called before forward(train=True)")
        return kernels.active.maxpool2_backward(np.ascontiguousarray(grad), self._arg)


class Flatten(Layer):
    def __init__(self):
        self._shape = None

    def forward(self, x, train=False):
        if train:
            self._shape = x.shape
        return x.reshape(x.shape[0], -1)

    def backward(self, grad):
        if self._shape is None:
            raise NoForwardCacheError("Flatten.backward called before forward(train=True)")
        return grad.reshape(self._shape)


class Dense(Layer):
    """Affine layer x @ w + b with an optional built-in ReLU."""

    def __init__(self, in_features, out_features, activation=None, rng=None):
        if activation not in (None, "relu"):
            raise ValueError(f"unsupported activation {activation!r}")
        rng = rng or np.random.default_rng(0)
        self.w = glorot_uniform(rng, (in_features, out_features), in_features, out_features)
        self.b = np.zeros(out_features)
        self.activation = activation
        self._x = None
        self._z = None
        self.dw = None
        self.db = None

    def forward(self, x, train=False):
        if x.shape[-1] != self.w.shape[0]:
            raise ShapeMismatchError(
                f"input width {x.shape[-1]} != weight rows {self.w.shape[0]}"
            )
        z = x @ self.w + self.b
        if train:
            self._x = x
            self._z = z
        return relu(z) if self.activation == "relu" else z

    def backward(self, grad):
        if self._x is None:
            raise NoForwardCacheError("Dense.backward called before forward(train=True)")
        dz = grad * (self._z > 0) if self.activation == "relu" else grad
        self.dw = self._x.T @ dz
        self.db = dz.sum(axis=0)
        return dz @ self.w.T

    def params(self):
        return [self.w, self.b]

    def grads(self):
        return [self.dw, self.db]

    def param_names(self):
        return ["w", "b"]


def conv2d_forward(x, w, b):
    """Functional SAME conv for a single image (H, W, C) or a batch."""
    w = np.asarray(w, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if w.ndim != 4 or w.shape[0] % 2 == 0 or w.shape[1] % 2 == 0:
        raise ShapeMismatchError("kernel must be (kh, kw, C, F) with odd kh, kw")
    xb, single = _as_batch(x, 4)
    if xb.shape[-1] != w.shape[2]:
        raise ShapeMismatchError(
            f"input has {xb.shape[-1]} channels, kernel expects {w.shape[2]}"
        )
    out = kernels.active.conv2d_forward(np.ascontiguousarray(xb), w, b)
    return out[0] if single else out


def maxpool2_forward(x):
    """Functional 2x2 max-pool for a single image or a batch."""
    xb, single = _as_batch(x, 4)
    B, H, W, C = xb.shape
    if H % 2 or W % 2:
        raise OddDimensionError(f"2x2 pooling needs even spatial dims, got {H}x{W}")
    out, _ = kernels.active.maxpool2_forward(np.ascontiguousarray(xb))
    return out[0] if single else out


def dense_forward(x, w, b, activation=None):
    """Functional dense layer for a single vector (n,) or a batch (B, n)."""
    w = np.asarray(w, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    xb, single = _as_batch(x, 2)
    if xb.shape[-1] != w.shape[0]:
        raise ShapeMismatchError(f"input width {xb.shape[-1]} != weight rows {w.shape[0]}")
    z = xb @ w + b
    if activation == "relu":
        z = relu(z)
    return z[0] if single else z
