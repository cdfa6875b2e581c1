"""Kernel backend selection.

Uses the compiled extension when it imports, else the pure-Python fallback.
Set ``FPURE_LAB_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("FPURE_LAB_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
STATUS_IN_SPAN = _impl.STATUS_IN_SPAN
STATUS_INDEPENDENT = _impl.STATUS_INDEPENDENT
STATUS_BUDGET = _impl.STATUS_BUDGET
KernelError = _impl.KernelError
standard_monomials = _impl.standard_monomials
nf_batch = _impl.nf_batch
eliminate = _impl.eliminate


def backend_module(name: str):
    """The named backend module (``"python"`` or ``"cython"``), for comparisons."""
    if name == "python":
        from . import _kernels_py

        return _kernels_py
    if name == "cython":
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    raise ValueError(f"unknown backend {name!r}")
