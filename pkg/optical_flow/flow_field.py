from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from autodiff.errors import DimensionError
from autodiff.tensor import FloatArray


@dataclass(frozen=True)
class FlowField:
    """H×W×2 displacement in pixels: channel 0 horizontal (f¹), channel 1 vertical (f²)."""

    vectors: FloatArray

    def __post_init__(self) -> None:
        if self.vectors.ndim != 3 or self.vectors.shape[2] != 2:
            raise DimensionError(f"flow field must be H×W×2, got {self.vectors.shape}")

    @classmethod
    def zeros(cls, height: int, width: int) -> FlowField:
        return cls(np.zeros((height, width, 2)))

    @classmethod
    def from_components(cls, horizontal: FloatArray, vertical: FloatArray) -> FlowField:
        return cls(np.stack([horizontal, vertical], axis=-1).astype(np.float64))

    @property
    def height(self) -> int:
        return self.vectors.shape[0]

    @property
    def width(self) -> int:
        return self.vectors.shape[1]

    @property
    def horizontal(self) -> FloatArray:
        return self.vectors[..., 0]

    @property
    def vertical(self) -> FloatArray:
        return self.vectors[..., 1]

    def magnitude(self) -> FloatArray:
        return np.hypot(self.horizontal, self.vertical)


def endpoint_error(estimate: FlowField, truth: FlowField, margin: int = 0) -> float:
    """Mean Euclidean distance between flow vectors, ignoring `margin` pixels at each border."""
    if estimate.vectors.shape != truth.vectors.shape:
        raise DimensionError(f"flow shapes differ: {estimate.vectors.shape} vs {truth.vectors.shape}")
    diff = estimate.vectors - truth.vectors
    if margin:
        diff = diff[margin:-margin, margin:-margin]
    return float(np.mean(np.hypot(diff[..., 0], diff[..., 1])))
