"""Backend selection for the hot numeric kernels.

``AIRCAST_BACKEND`` picks the implementation:

* ``numba`` -- jitted loops (error if numba is not importable)
* ``numpy`` -- pure-numpy fallback
* ``auto`` / unset -- numba when importable, else numpy

The chosen module is bound to :data:`active` at import time. Library code
looks the functions up through the module attribute (``kernels.active.f``)
so tests and benchmarks can swap backends at runtime.
"""

import os

from . import numpy_backend

ENV_VAR = "AIRCAST_BACKEND"


def resolve(name: str):
    """Return the backend module for ``name`` ('auto', 'numba' or 'numpy')."""
    name = (name or "auto").strip().lower()
    if name == "numpy":
        return numpy_backend
    if name == "numba":
        from . import numba_backend

        return numba_backend
    if name == "auto":
        try:
            from . import numba_backend
        except ImportError:
            return numpy_backend
        return numba_backend
    raise ValueError(f"unknown kernel backend {name!r} (use numba, numpy or auto)")


active = resolve(os.environ.get(ENV_VAR, "auto"))


def warmup():
    """Trigger jit compilation on tiny inputs so later calls run hot."""
    import numpy as np

    x = np.zeros((1, 2, 2, 1))
    w = np.zeros((1, 1, 1, 1))
    b = np.zeros(1)
    active.conv2d_backward(x, w, active.conv2d_forward(x, w, b))
    out, arg = active.maxpool2_forward(x)
    active.maxpool2_backward(out, arg)
    idx = np.zeros(1, dtype=np.int64)
    active.grid_accumulate(idx, idx, idx, np.zeros(1), 1, 1, 1)
