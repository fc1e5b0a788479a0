"""Kernel backend selection.

The compiled Cython core is preferred when it was built; otherwise the
NumPy reference implementation is used. ``BEVDISTILL_KERNELS`` forces the
choice: ``native``, ``reference`` (or ``auto``, the default).

Both backends compute the same functions to floating-point agreement but
not bitwise identically (summation order differs), so reproducibility
guarantees hold per backend.
"""

import os

from . import _reference

try:
    from . import _native
except ImportError:
    _native = None

_requested = os.environ.get("BEVDISTILL_KERNELS", "auto").strip().lower()
if _requested in ("", "auto"):
    _impl = _native if _native is not None else _reference
elif _requested in ("native", "compiled", "cython"):
    if _native is None:
        raise ImportError(
            "BEVDISTILL_KERNELS=%s but the compiled kernel extension is not "
            "built; reinstall the package or use BEVDISTILL_KERNELS=reference"
            % _requested
        )
    _impl = _native
elif _requested in ("reference", "python", "numpy"):
    _impl = _reference
else:
    raise ValueError("unknown BEVDISTILL_KERNELS value: %r" % _requested)

BACKEND = "native" if _impl is _native else "reference"

conv2d_forward = _impl.conv2d_forward
conv2d_backward = _impl.conv2d_backward
bilinear_forward = _impl.bilinear_forward
bilinear_backward = _impl.bilinear_backward


def available_backends():
    """Names of the importable backends ('reference' is always present)."""
    names = ["reference"]
    if _native is not None:
        names.append("native")
    return names


def get_backend(name):
    """Return the backend module by name, for benchmarks and parity tests."""
    if name == "reference":
        return _reference
    if name == "native":
        if _native is None:
            raise ImportError("compiled kernel extension is not built")
        return _native
    raise ValueError("unknown backend: %r" % name)
