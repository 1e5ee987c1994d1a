"""Pixel-buffer kernels: sRGB -> LUV conversion and nearest-bin assignment.

These are the per-pixel inner loops of corpus extraction. Two backends
implement the same arithmetic (identical operation order, so results are
bit-equal): a Cython extension compiled at install time and a vectorised
numpy fallback. The extension is preferred when present; set
``CHROMALOG_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from .. import colour

# 256-entry sRGB linearisation table shared by both backends.
LINEAR_LUT = np.array([colour.srgb_channel_to_linear(i) for i in range(256)], dtype=np.float64)

# Conversion constants, flattened for the C kernel:
# 0-8 the sRGB->XYZ matrix rows, 9 Yn, 10 u'n, 11 v'n, 12 CIE eps, 13 CIE kappa.
PARAMS = np.array(
    [
        *colour._M_XYZ[0],
        *colour._M_XYZ[1],
        *colour._M_XYZ[2],
        colour._WHITE_YN,
        colour._WHITE_UN,
        colour._WHITE_VN,
        colour._CIE_EPS,
        colour._CIE_KAPPA,
    ],
    dtype=np.float64,
)

from . import _purepy

if os.environ.get("CHROMALOG_PURE_PYTHON") == "1":
    _impl = _purepy
    BACKEND = "purepy"
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _purepy
        BACKEND = "purepy"


def backend_name() -> str:
    return BACKEND


def available_backends() -> dict:
    """Backends importable in this environment, keyed by name."""
    out = {"purepy": _purepy}
    try:
        from . import _fast

        out["cython"] = _fast
    except ImportError:
        pass
    return out


def _as_pixel_array(rgb) -> np.ndarray:
    arr = np.ascontiguousarray(rgb, dtype=np.uint8)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"expected an (N, 3) pixel array, got shape {arr.shape}")
    return arr


def rgb_pixels_to_luv(rgb) -> np.ndarray:
    """(N, 3) uint8 sRGB pixels -> (N, 3) float64 LUV coordinates."""
    return _impl.rgb_to_luv(_as_pixel_array(rgb), LINEAR_LUT, PARAMS)


def assign_pixels(rgb, centers_luv: np.ndarray, impl=None) -> np.ndarray:
    """Nearest palette bin (LUV Euclidean, lowest index wins ties) per pixel.

    ``centers_luv`` is the (B, 3) float64 array of bin-center LUV
    coordinates; ``impl`` overrides the selected backend (used by the
    benchmark and the backend-equivalence tests).
    """
    centers = np.ascontiguousarray(centers_luv, dtype=np.float64)
    if centers.ndim != 2 or centers.shape[1] != 3 or centers.shape[0] == 0:
        raise ValueError(f"expected a non-empty (B, 3) center array, got shape {centers.shape}")
    backend = _impl if impl is None else impl
    return backend.assign(_as_pixel_array(rgb), centers, LINEAR_LUT, PARAMS)


def nearest_luv(luv: np.ndarray, centers_luv: np.ndarray) -> np.ndarray:
    """Nearest bin per (N, 3) LUV row; brute-force argmin, ties to lowest index."""
    return _purepy.nearest_luv(
        np.ascontiguousarray(luv, dtype=np.float64),
        np.ascontiguousarray(centers_luv, dtype=np.float64),
    )
