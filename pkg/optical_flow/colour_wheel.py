from __future__ import annotations

from functools import cache

import numpy as np
from numpy.typing import NDArray

from autodiff.tensor import FloatArray
from optical_flow.flow_field import FlowField

# hue segment lengths: red-yellow, yellow-green, green-cyan, cyan-blue, blue-magenta, magenta-red
SEGMENTS = (15, 6, 4, 11, 13, 6)
MIN_MAX_NORM = 1e-5
QUANTIZE_EPS = 1e-6  # in 8-bit levels


@cache
def make_colour_wheel() -> FloatArray:
    """55×3 Middlebury wheel on the 0-255 scale."""
    ry, yg, gc, cb, bm, mr = SEGMENTS
    wheel = np.zeros((sum(SEGMENTS), 3))
    col = 0

    wheel[col : col + ry, 0] = 255
    wheel[col : col + ry, 1] = np.floor(255 * np.arange(ry) / ry)
    col += ry

    wheel[col : col + yg, 0] = 255 - np.floor(255 * np.arange(yg) / yg)
    wheel[col : col + yg, 1] = 255
    col += yg

    wheel[col : col + gc, 1] = 255
    wheel[col : col + gc, 2] = np.floor(255 * np.arange(gc) / gc)
    col += gc

    wheel[col : col + cb, 1] = 255 - np.floor(255 * np.arange(cb) / cb)
    wheel[col : col + cb, 2] = 255
    col += cb

    wheel[col : col + bm, 2] = 255
    wheel[col : col + bm, 0] = np.floor(255 * np.arange(bm) / bm)
    col += bm

    wheel[col : col + mr, 2] = 255 - np.floor(255 * np.arange(mr) / mr)
    wheel[col : col + mr, 0] = 255
    wheel.flags.writeable = False
    return wheel


def _normalised_to_rgb8(horizontal: FloatArray, vertical: FloatArray) -> NDArray[np.uint8]:
    wheel = make_colour_wheel()
    bins = wheel.shape[0]

    radius = np.minimum(np.hypot(horizontal, vertical), 1.0)
    angle = np.arctan2(-vertical, -horizontal) / np.pi
    position = (angle + 1.0) / 2.0 * (bins - 1)
    k0 = np.floor(position).astype(np.int64)
    k1 = k0 + 1
    k1[k1 == bins] = 0
    fraction = position - k0

    image = np.empty(horizontal.shape + (3,), dtype=np.uint8)
    for channel in range(3):
        col0 = wheel[k0, channel] / 255.0
        col1 = wheel[k1, channel] / 255.0
        col = (1.0 - fraction) * col0 + fraction * col1
        col = 1.0 - radius * (1.0 - col)  # zero motion is white
        # round-off in the hue blend must not pull a saturated 255 down to 254
        image[..., channel] = np.floor(np.clip(255.0 * col + QUANTIZE_EPS, 0.0, 255.0)).astype(np.uint8)
    return image


def flow_to_rgb8(flow: FlowField, max_norm: float | None = None) -> NDArray[np.uint8]:
    if max_norm is None:
        max_norm = float(np.max(flow.magnitude())) if flow.vectors.size else 0.0
    scale = max(max_norm, MIN_MAX_NORM)
    return _normalised_to_rgb8(flow.horizontal / scale, flow.vertical / scale)


def flow_to_rgb(flow: FlowField, max_norm: float | None = None) -> FloatArray:
    """H×W×3 image in [0, 1]; the 8-bit form divided by 255."""
    return flow_to_rgb8(flow, max_norm).astype(np.float64) / 255.0
