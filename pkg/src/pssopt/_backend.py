"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the NumPy
fallback is used otherwise.  Setting ``PSSOPT_BACKEND=python`` in the
environment forces the fallback (used by the backend benchmark and the
equivalence tests).  Both backends are bit-compatible, so the choice never
changes results, only speed.
"""

import os

from pssopt import _kernels as _py

if os.environ.get("PSSOPT_BACKEND", "").lower() == "python":
    _impl = _py
else:
    try:
        from pssopt import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

uniform_block = _impl.uniform_block
scale_population = _impl.scale_population
mix_population = _impl.mix_population

HAVE_SPEEDUPS = _impl is not _py


def backend_name() -> str:
    """'compiled' when the extension is active, 'python' otherwise."""
    return "compiled" if HAVE_SPEEDUPS else "python"
