"""Kernel selection: compiled Cython extension if built, pure Python otherwise.

Set QCONGR_KERNEL=python to force the fallback (used by the benchmark), or
QCONGR_KERNEL=compiled to fail loudly when the extension is missing.
"""

from __future__ import annotations

import os

_choice = os.environ.get("QCONGR_KERNEL", "").strip().lower()

if _choice == "python":
    from . import _kernel_py as kernel
elif _choice == "compiled":
    from . import _kernel as kernel  # type: ignore
else:
    try:
        from . import _kernel as kernel  # type: ignore
    except ImportError:
        from . import _kernel_py as kernel  # type: ignore


def active_kernel() -> str:
    """'compiled' or 'python'."""
    return kernel.IMPLEMENTATION
