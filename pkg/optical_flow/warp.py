import numpy as np
from scipy.ndimage import map_coordinates

from autodiff.tensor import FloatArray
from optical_flow.flow_field import FlowField
from optical_flow.images import require_same_frame


def warp_components(image: FloatArray, horizontal: FloatArray, vertical: FloatArray) -> FloatArray:
    """Bilinear sample of a single-channel image at (x + horizontal, y + vertical), border-clamped."""
    rows, cols = np.indices(image.shape, dtype=np.float64)
    return map_coordinates(image, [rows + vertical, cols + horizontal], order=1, mode="nearest")


def warp(image: FloatArray, flow: FlowField) -> FloatArray:
    """output(u, v) = image(u + f¹(u, v), v + f²(u, v))"""
    require_same_frame(image, flow.vectors)
    if not np.any(flow.vectors):
        return image.copy()

    if image.ndim == 2:
        return warp_components(image, flow.horizontal, flow.vertical)
    channels = [warp_components(image[..., c], flow.horizontal, flow.vertical) for c in range(image.shape[2])]
    return np.stack(channels, axis=-1)
