from __future__ import annotations

import numpy as np

from autodiff import ops
from autodiff.errors import DimensionError
from autodiff.module import Module
from autodiff.tensor import FloatArray, Tensor
from backbone.configuration.backbone_settings import BackboneSettings
from backbone.token_geometry import patch_grid
from layers.linear import Linear


def extract_patches(clip: FloatArray, patch_size: tuple[int, int, int]) -> FloatArray:
    """
    Cut a T×H×W×C clip into non-overlapping (t_p, h_p, w_p) cubes, one row per cube.

    Rows follow (t, h, w) grid order; each row flattens its cube in (t, h, w, c) order.
    """
    nt, nh, nw = patch_grid(clip.shape, patch_size)
    tp, hp, wp = patch_size
    channels = clip.shape[3]
    cubes = clip.reshape(nt, tp, nh, hp, nw, wp, channels).transpose(0, 2, 4, 1, 3, 5, 6)
    return cubes.reshape(nt * nh * nw, tp * hp * wp * channels)


class PatchEmbedding(Module):
    def __init__(
        self,
        settings: BackboneSettings,
        clip_shape: tuple[int, int, int, int],
        rng: np.random.Generator,
    ) -> None:
        super().__init__()
        self._settings = settings
        self.clip_shape = clip_shape

        nt, nh, nw = patch_grid(clip_shape, settings.patch_size)
        self.token_count = nt * nh * nw
        patch_values = int(np.prod(settings.patch_size)) * clip_shape[3]

        self.projection = self.add_child("projection", Linear(patch_values, settings.embed_dim, rng))
        self.position = (
            self.add_parameter("position", rng.normal(0.0, 0.02, size=(self.token_count, settings.embed_dim)))
            if settings.positional_embedding
            else None
        )

    def patchify(self, clip: FloatArray) -> Tensor:
        """Token matrix [L×D_b] before the positional table is added."""
        if tuple(clip.shape) != self.clip_shape:
            # geometry errors name the offending axis
            patch_grid(clip.shape, self._settings.patch_size)
            raise DimensionError(f"clip shape {clip.shape} does not match the configured {self.clip_shape}")
        return self.projection.forward(Tensor(extract_patches(clip, self._settings.patch_size)))

    def forward(self, clip: FloatArray) -> Tensor:
        tokens = self.patchify(clip)
        return tokens if self.position is None else ops.add(tokens, self.position)
