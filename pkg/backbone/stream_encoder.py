from __future__ import annotations

import numpy as np

from autodiff.module import Module
from autodiff.tensor import FloatArray
from backbone.configuration.backbone_settings import BackboneSettings
from backbone.patch_embedding import PatchEmbedding
from backbone.pooled_attention_block import PooledAttentionBlock
from backbone.stream_output import StreamOutput
from backbone.token_geometry import pooled_token_count
from layers.linear import Linear


class StreamEncoder(Module):
    """patchify → pooled attention blocks → linear projection to D_o channels."""

    def __init__(
        self,
        settings: BackboneSettings,
        clip_shape: tuple[int, int, int, int],
        rng: np.random.Generator,
    ) -> None:
        super().__init__()
        self._settings = settings

        self.embedding = self.add_child("embedding", PatchEmbedding(settings, clip_shape, rng))
        self.blocks = [
            self.add_child(f"block{i}", PooledAttentionBlock(settings, stride, rng)) for i, stride in enumerate(settings.pool_strides)
        ]
        self.projection = self.add_child("projection", Linear(settings.embed_dim, settings.output_dim, rng))

    @property
    def output_shape(self) -> tuple[int, int]:
        return pooled_token_count(self.embedding.token_count, self._settings.pool_strides), self._settings.output_dim

    def forward(self, clip: FloatArray) -> StreamOutput:
        tokens = self.embedding.forward(clip)
        for block in self.blocks:
            tokens = block.forward(tokens)
        return StreamOutput(self.projection.forward(tokens))


def encode_stream(encoder: StreamEncoder, clip: FloatArray) -> StreamOutput:
    return encoder.forward(clip)
