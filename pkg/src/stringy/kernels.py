"""Backend selection for the dense polynomial kernels.

The compiled extension ``stringy._kernels`` is used when it imports and
``STRINGY_PURE_PYTHON`` is unset; otherwise the pure-Python module is
used. Callers go through the module attributes (``kernels.poly_mul``) so
that :func:`set_backend` takes effect everywhere.
"""
import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

BACKEND = None
poly_mul = divide_binomial = mulmod = None


def set_backend(name):
    """Switch every kernel to backend ``name`` ("python" or "compiled")."""
    global BACKEND, poly_mul, divide_binomial, mulmod
    mod = BACKENDS[name]
    poly_mul = mod.poly_mul
    divide_binomial = mod.divide_binomial
    mulmod = mod.mulmod
    BACKEND = name


if os.environ.get("STRINGY_PURE_PYTHON") or _compiled is None:
    set_backend("python")
else:
    set_backend("compiled")
