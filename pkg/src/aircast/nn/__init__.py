"""From-scratch dense/convolutional numerics: layers, loss, Adam, gradcheck."""

from .gradcheck import (
    GradCheckEntry,
    GradCheckReport,
    finite_diff_check,
    finite_diff_check_fn,
)
from .layers import (
    Conv2D,
    Dense,
    Flatten,
    MaxPool2,
    conv2d_forward,
    dense_forward,
    glorot_uniform,
    maxpool2_forward,
    relu,
)
from .losses import cross_entropy_loss, softmax, softmax_cross_entropy
from .network import Network
from .optim import AdamState, adam_step

__all__ = [
    "AdamState",
    "Conv2D",
    "Dense",
    "Flatten",
    "GradCheckEntry",
    "GradCheckReport",
    "MaxPool2",
    "Network",
    "adam_step",
    "conv2d_forward",
    "cross_entropy_loss",
    "dense_forward",
    "finite_diff_check",
    "finite_diff_check_fn",
    "glorot_uniform",
    "maxpool2_forward",
    "relu",
    "softmax",
    "softmax_cross_entropy",
]
