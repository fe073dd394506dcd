from __future__ import annotations

import numpy as np
from scipy.ndimage import convolve, gaussian_filter, zoom

from autodiff.tensor import FloatArray
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from optical_flow.flow_field import FlowField
from optical_flow.images import require_same_frame, to_grayscale
from optical_flow.warp import warp_components

# weighted neighbourhood mean used for ū, v̄
_AVERAGING_KERNEL = np.array(
    [
        [1 / 12, 1 / 6, 1 / 12],
        [1 / 6, 0.0, 1 / 6],
        [1 / 12, 1 / 6, 1 / 12],
    ]
)


class HornSchunckEstimator:
    """
    Coarse-to-fine Horn-Schunck flow.

    Each pyramid level (downscale 2) warps the second frame by the current flow,
    linearises brightness constancy around it and runs Jacobi iterations on the
    total flow; the result is upsampled ×2 to seed the next finer level.
    """

    def __init__(self, settings: FlowSolverSettings) -> None:
        self._settings = settings

    @property
    def settings(self) -> FlowSolverSettings:
        return self._settings

    def estimate(self, i1: FloatArray, i2: FloatArray) -> FlowField:
        require_same_frame(i1, i2)
        g1 = to_grayscale(i1) * 255.0
        g2 = to_grayscale(i2) * 255.0
        height, width = g1.shape

        if np.ptp(g1) == 0.0 and np.ptp(g2) == 0.0:
            # no gradient anywhere: the data term vanishes
            return FlowField.zeros(height, width)

        if self._settings.presmooth_sigma > 0:
            g1 = gaussian_filter(g1, self._settings.presmooth_sigma, mode="nearest")
            g2 = gaussian_filter(g2, self._settings.presmooth_sigma, mode="nearest")

        pyramid = self._build_pyramid(g1, g2)

        u = np.zeros_like(pyramid[-1][0])
        v = np.zeros_like(pyramid[-1][0])
        for level, (l1, l2) in enumerate(reversed(pyramid)):
            if level > 0:
                u, v = self._upsample(u, l1.shape), self._upsample(v, l1.shape)
            for _ in range(self._settings.warps_per_level):
                u, v = self._refine(l1, l2, u, v)

        np.clip(u, -width, width, out=u)
        np.clip(v, -height, height, out=v)
        return FlowField.from_components(u, v)

    def _build_pyramid(self, g1: FloatArray, g2: FloatArray) -> list[tuple[FloatArray, FloatArray]]:
        pyramid = [(g1, g2)]
        for _ in range(1, self._settings.pyramid_levels):
            c1, c2 = pyramid[-1]
            if min(c1.shape) < 8:
                break
            pyramid.append((self._downsample(c1), self._downsample(c2)))
        return pyramid

    @staticmethod
    def _downsample(image: FloatArray) -> FloatArray:
        return zoom(gaussian_filter(image, 1.0, mode="nearest"), 0.5, order=1)

    @staticmethod
    def _upsample(component: FloatArray, shape: tuple[int, ...]) -> FloatArray:
        factors = (shape[0] / component.shape[0], shape[1] / component.shape[1])
        scaled = zoom(component, factors, order=1)
        return scaled[: shape[0], : shape[1]] * 2.0

    def _refine(self, i1: FloatArray, i2: FloatArray, u0: FloatArray, v0: FloatArray) -> tuple[FloatArray, FloatArray]:
        i2_warped = warp_components(i2, u0, v0) if np.any(u0) or np.any(v0) else i2
        grad_y, grad_x = np.gradient(0.5 * (i1 + i2_warped))
        grad_t = i2_warped - i1

        alpha_sq = self._settings.alpha**2
        denominator = alpha_sq + grad_x**2 + grad_y**2

        u, v = u0.copy(), v0.copy()
        for _ in range(self._settings.iterations):
            u_avg = convolve(u, _AVERAGING_KERNEL, mode="nearest")
            v_avg = convolve(v, _AVERAGING_KERNEL, mode="nearest")
            residual = (grad_x * (u_avg - u0) + grad_y * (v_avg - v0) + grad_t) / denominator
            u_next = u_avg - grad_x * residual
            v_next = v_avg - grad_y * residual

            change = float(np.mean(np.hypot(u_next - u, v_next - v)))
            u, v = u_next, v_next
            if change < self._settings.tolerance:
                break

        return u, v


def estimate_flow(i1: FloatArray, i2: FloatArray, settings: FlowSolverSettings) -> FlowField:
    return HornSchunckEstimator(settings).estimate(i1, i2)
