"""Kernel backend selection.

The hot loops live in _kernels_numba (jitted) with a pure-numpy fallback in
_kernels_numpy.  GFPERM_BACKEND=numpy forces the fallback; GFPERM_BACKEND=numba
requires numba; unset tries numba and quietly falls back when it is missing.
Both backends implement the same contracts bit-for-bit.
"""

import os

ENV_VAR = "GFPERM_BACKEND"

_active = None


def _load(name: str):
    if name == "numpy":
        from . import _kernels_numpy as mod
        return mod
    if name == "numba":
        from . import _kernels_numba as mod
        return mod
    raise ValueError(f"{ENV_VAR} must be 'numba' or 'numpy', got {name!r}")


def kernels():
    """The active kernel module (cached after first selection)."""
    global _active
    if _active is None:
        want = os.environ.get(ENV_VAR, "").strip().lower()
        if want:
            _active = _load(want)
        else:
            try:
                _active = _load("numba")
            except ImportError:
                _active = _load("numpy")
    return _active


def backend_name() -> str:
    return kernels().NAME


def set_backend(name) -> None:
    """Override the backend in-process (mainly for tests and benchmarks)."""
    global _active
    _active = _load(name) if name is not None else None
