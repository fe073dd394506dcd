import numpy as np

from autodiff.errors import DimensionError
from autodiff.tensor import FloatArray

LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])


def to_grayscale(image: FloatArray) -> FloatArray:
    if image.ndim == 2:
        return image.astype(np.float64)
    if image.ndim == 3 and image.shape[2] == 1:
        return image[..., 0].astype(np.float64)
    if image.ndim == 3 and image.shape[2] == 3:
        return image @ LUMA_WEIGHTS
    raise DimensionError(f"expected an H×W, H×W×1 or H×W×3 image, got {image.shape}")


def require_same_frame(a: FloatArray, b: FloatArray) -> None:
    if a.shape[:2] != b.shape[:2]:
        raise DimensionError(f"frame extents differ: {a.shape[:2]} vs {b.shape[:2]}")
