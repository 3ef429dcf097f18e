"""Softmax and cross-entropy, with the fused training-time gradient."""

import numpy as np

from ..errors import NotOneHotError

PROB_FLOOR = 1e-12


def softmax(logits):
    """Numerically stable softmax along the last axis."""
    z = np.asarray(logits, dtype=np.float64)
    z = z - z.max(axis=-1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=-1, keepdims=True)


def _check_one_hot(target):
    t = np.asarray(target, dtype=np.float64)
    ok = np.all((t == 0.0) | (t == 1.0)) and np.all(t.sum(axis=-1) == 1.0)
    if not ok:
        raise NotOneHotError("target must be one-hot (rows of a single 1 among 0s)")
    return t


def cross_entropy_loss(probs, target):
    """-log of the predicted probability of the true class.

    Probabilities are clipped to [1e-12, 1] before the log; for a batch
    (2D inputs) the mean over samples is returned.
    """
    t = _check_one_hot(target)
    p = np.clip(np.asarray(probs, dtype=np.float64), PROB_FLOOR, 1.0)
    per_sample = -(t * np.log(p)).sum(axis=-1)
    return float(np.mean(per_sample))


def softmax_cross_entropy(logits, target):
    """Mean batch loss and its gradient w.r.t. the logits.

    For a single sample the gradient is softmax(logits) - one_hot; a batch
    divides by the batch size because the loss is the batch mean.
    """
    t = _check_one_hot(target)
    probs = softmax(logits)
    loss = cross_entropy_loss(probs, t)
    scale = probs.shape[0] if probs.ndim == 2 else 1
    return loss, (probs - t) / scale
