"""Kernel backend selection.

Imports the compiled extension when it was built, otherwise the numpy
fallback.  ``BACKEND`` reports which one is live; both expose the same
five functions (see _kernels_py for the contracts).  Setting the
environment variable ``BLRINGS_BACKEND=python`` skips the compiled
extension.
"""

from __future__ import annotations

import os

try:
    if os.environ.get("BLRINGS_BACKEND") == "python":
        raise ImportError("python backend forced via BLRINGS_BACKEND")
    from blrings._kernels_c import (  # type: ignore[attr-defined]
        BACKEND,
        additive_closure,
        enumerate_ideals_exhaustive,
        ideal_closure,
        is_ideal,
        residual_left,
        residual_right,
    )
except ImportError:  # pragma: no cover - depends on build environment
    from blrings._kernels_py import (
        BACKEND,
        additive_closure,
        enumerate_ideals_exhaustive,
        ideal_closure,
        is_ideal,
        residual_left,
        residual_right,
    )

__all__ = [
    "BACKEND",
    "additive_closure",
    "enumerate_ideals_exhaustive",
    "ideal_closure",
    "is_ideal",
    "residual_left",
    "residual_right",
]
