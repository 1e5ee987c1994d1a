"""Colour coordinate systems and conversions.

Three spaces are used throughout the package:

* sRGB with integer channels in [0, 255] (the storage/display space),
* hue-chroma-luminance (HCL) in the Sarifuddin-Missaoui formulation,
  used for the quantisation grid because it spreads colours in a
  perceptually even way,
* CIE LUV (sRGB primaries, D65 white point), used for nearest-neighbour
  distances and the chrominance/luminance summary statistics.

All functions here are pure and operate on single colours; the vectorised
pixel-buffer versions live in :mod:`chromalog.kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# HCL tuning constants from the Sarifuddin-Missaoui model.
HCL_Y0 = 100.0
HCL_GAMMA = 3.0

_ONE_THIRD = 1.0 / 3.0

# sRGB -> XYZ (linear, D65).
_M_XYZ = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.2126729, 0.7151522, 0.0721750),
    (0.0193339, 0.1191920, 0.9503041),
)

# CIE L* breakpoints as exact rationals.
_CIE_EPS = 216.0 / 24389.0
_CIE_KAPPA = 24389.0 / 27.0


def _white_point():
    xn = _M_XYZ[0][0] + _M_XYZ[0][1] + _M_XYZ[0][2]
    yn = _M_XYZ[1][0] + _M_XYZ[1][1] + _M_XYZ[1][2]
    zn = _M_XYZ[2][0] + _M_XYZ[2][1] + _M_XYZ[2][2]
    d = xn + 15.0 * yn + 3.0 * zn
    return yn, 4.0 * xn / d, 9.0 * yn / d


_WHITE_YN, _WHITE_UN, _WHITE_VN = _white_point()

# Luminance of sRGB white under the HCL transform (the top of the L axis).
HCL_L_MAX = 255.0 * (2.0 * math.exp(HCL_GAMMA / HCL_Y0) - 1.0) / 2.0
# Chroma never exceeds 2/3 * 255: the pairwise channel spread is maximal
# (and Q = 1) when one channel is 0 and another 255.
HCL_C_MAX = 2.0 * 255.0 / 3.0


@dataclass(frozen=True)
class RgbColour:
    """An sRGB colour with integer channels in [0, 255]."""

    r: int
    g: int
    b: int

    def __post_init__(self):
        for name in ("r", "g", "b"):
            v = getattr(self, name)
            if not isinstance(v, int) or not 0 <= v <= 255:
                raise ValueError(f"channel {name}={v!r} outside [0, 255]")

    def as_tuple(self):
        return (self.r, self.g, self.b)


@dataclass(frozen=True)
class HclColour:
    """Hue (degrees, wrapped to [0, 360)), chroma >= 0, luminance."""

    h: float
    c: float
    l: float

    def __post_init__(self):
        if self.c < 0:
            raise ValueError(f"chroma {self.c} < 0")
        object.__setattr__(self, "h", self.h % 360.0)


@dataclass(frozen=True)
class LuvColour:
    """CIE LUV: lightness L in [0, 100] for in-gamut sRGB, chrominance (u, v)."""

    L: float
    u: float
    v: float

    def as_tuple(self):
        return (self.L, self.u, self.v)


def rgb_to_hcl(c: RgbColour) -> HclColour:
    """Convert sRGB to Sarifuddin-Missaoui HCL.

    Grey inputs (r = g = b) give chroma exactly 0. The red axis sits at
    hue 0, yellow at 60, green at 120, cyan at 180, blue at 240 and
    magenta at 300 degrees.
    """
    r, g, b = float(c.r), float(c.g), float(c.b)
    mx = max(r, g, b)
    mn = min(r, g, b)
    if mx == 0.0:
        return HclColour(0.0, 0.0, 0.0)
    q = math.exp(HCL_GAMMA * mn / (mx * HCL_Y0))
    lum = (q * mx + (q - 1.0) * mn) / 2.0
    rg = r - g
    gb = g - b
    chroma = q * (abs(rg) + abs(gb) + abs(b - r)) / 3.0
    if chroma == 0.0:
        return HclColour(0.0, 0.0, lum)
    if rg >= 0.0:
        a = math.degrees(math.atan2(gb, rg))
        hue = (2.0 / 3.0) * a if gb >= 0.0 else (4.0 / 3.0) * a
    else:
        a = math.degrees(math.atan(gb / rg))
        hue = 180.0 + (4.0 / 3.0) * a if gb >= 0.0 else (2.0 / 3.0) * a - 180.0
    return HclColour(hue, chroma, lum)


def hcl_to_rgb(c: HclColour) -> RgbColour:
    """Invert :func:`rgb_to_hcl`.

    Exact for coordinates produced by the forward transform (up to channel
    rounding); out-of-gamut coordinates are clamped per channel.
    """
    r, g, b = hcl_to_rgb_float(c)
    return RgbColour(_clamp_channel(r), _clamp_channel(g), _clamp_channel(b))


def hcl_to_rgb_float(c: HclColour):
    """HCL -> unclamped float RGB channels; gamut checks look at these."""
    chroma = c.c
    lum = c.l
    if lum <= 0.0:
        # L = 0 only at black (chroma is then 0 too); negative L is out of
        # gamut and collapses to black after clamping either way.
        return (0.0, 0.0, 0.0)

    # Q depends on min/max which are unknown; start from the closed-form
    # estimate (exact on the grey and min=0 boundaries) and take a few
    # fixed-point steps, which converge because gamma/Y0 is small.
    q = math.exp((1.0 - 3.0 * chroma / (4.0 * lum)) * HCL_GAMMA / HCL_Y0)
    mn = mx = 0.0
    for _ in range(8):
        mn = (4.0 * lum - 3.0 * chroma) / (4.0 * q - 2.0)
        mx = mn + 3.0 * chroma / (2.0 * q)
        if mx <= 0.0:
            break
        t = mn / mx
        t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
        q_next = math.exp(HCL_GAMMA * t / HCL_Y0)
        if abs(q_next - q) <= 1e-15:
            q = q_next
            break
        q = q_next
    mn = (4.0 * lum - 3.0 * chroma) / (4.0 * q - 2.0)
    mx = mn + 3.0 * chroma / (2.0 * q)

    h = c.h % 360.0
    if h > 180.0:
        h -= 360.0
    # Each 60-degree sector fixes which channels are max/min; the middle
    # channel comes from inverting the hue arctangent.
    if 0.0 <= h <= 60.0:
        if h == 60.0:
            return (mx, mx, mn)
        th = math.tan(math.radians(1.5 * h))
        return (mx, (mx * th + mn) / (1.0 + th), mn)
    if 60.0 < h <= 120.0:
        th = math.tan(math.radians(0.75 * (h - 180.0)))
        return (mx + (mx - mn) / th, mx, mn)
    if 120.0 < h <= 180.0:
        th = math.tan(math.radians(0.75 * (h - 180.0)))
        r = mn
        return (r, mx, mx - th * (r - mx))
    if -60.0 <= h < 0.0:
        th = math.tan(math.radians(0.75 * h))
        g = mn
        return (mx, g, g - th * (mx - g))
    if -120.0 < h < -60.0:
        th = math.tan(math.radians(0.75 * h))
        g = mn
        return (g + (g - mx) / th, g, mx)
    # -180 < h <= -120
    if h == -120.0:
        return (mn, mn, mx)
    th = math.tan(math.radians(1.5 * (h + 180.0)))
    r = mn
    return (r, (r * th + mx) / (1.0 + th), mx)


def _clamp_channel(x: float) -> int:
    if x <= 0.0:
        return 0
    if x >= 255.0:
        return 255
    return int(round(x))


def srgb_channel_to_linear(v: int) -> float:
    """One sRGB channel in [0, 255] -> linear-light value in [0, 1]."""
    c = v / 255.0
    if c <= 0.04045:
        return c / 12.92
    return ((c + 0.055) / 1.055) ** 2.4


def rgb_to_luv(c: RgbColour) -> LuvColour:
    """Convert sRGB to CIE LUV (D65). Black maps to (0, 0, 0) exactly."""
    lr = srgb_channel_to_linear(c.r)
    lg = srgb_channel_to_linear(c.g)
    lb = srgb_channel_to_linear(c.b)
    x = lr * _M_XYZ[0][0] + lg * _M_XYZ[0][1] + lb * _M_XYZ[0][2]
    y = lr * _M_XYZ[1][0] + lg * _M_XYZ[1][1] + lb * _M_XYZ[1][2]
    z = lr * _M_XYZ[2][0] + lg * _M_XYZ[2][1] + lb * _M_XYZ[2][2]
    d = x + 15.0 * y + 3.0 * z
    if d == 0.0:
        return LuvColour(0.0, 0.0, 0.0)
    yr = y / _WHITE_YN
    if yr > _CIE_EPS:
        lstar = 116.0 * yr ** _ONE_THIRD - 16.0
    else:
        lstar = _CIE_KAPPA * yr
    up = 4.0 * x / d
    vp = 9.0 * y / d
    return LuvColour(lstar, 13.0 * lstar * (up - _WHITE_UN), 13.0 * lstar * (vp - _WHITE_VN))


def hcl_distance(a: HclColour, b: HclColour) -> float:
    """Cylindrical Euclidean distance in HCL coordinates.

    Used only for the perceptual-reordering comparison against plain RGB
    distances; bin assignment uses LUV.
    """
    dh = math.radians(abs(a.h - b.h) if abs(a.h - b.h) <= 180.0 else 360.0 - abs(a.h - b.h))
    dl = a.l - b.l
    return math.sqrt(dl * dl + a.c * a.c + b.c * b.c - 2.0 * a.c * b.c * math.cos(dh))


def rgb_distance(a: RgbColour, b: RgbColour) -> float:
    """Plain Euclidean distance between RGB tuples."""
    return math.sqrt((a.r - b.r) ** 2 + (a.g - b.g) ** 2 + (a.b - b.b) ** 2)
