from __future__ import annotations

import numpy as np

from autodiff import ops
from autodiff.errors import DimensionError
from autodiff.module import Module
from autodiff.tensor import Tensor
from backbone.stream_output import StreamOutput
from fusion.token_mode import TokenMode


class FusionInput(Module):
    """
    X = [X_class; O_r E; O_f E] + E_pos, with E shared by both streams.

    In POOLED mode each stream is averaged over its L_o tokens first, giving three rows.
    """

    def __init__(self, dim: int, stream_tokens: int, token_mode: TokenMode, rng: np.random.Generator) -> None:
        super().__init__()
        self.dim = dim
        self.token_mode = token_mode
        self.stream_tokens = stream_tokens
        positions = 3 if token_mode is TokenMode.POOLED else 2 * stream_tokens + 1

        bound = 1.0 / np.sqrt(dim)
        self.class_token = self.add_parameter("class_token", rng.normal(0.0, 0.02, size=(1, dim)))
        self.projection = self.add_parameter("projection", rng.uniform(-bound, bound, size=(dim, dim)))
        self.position = self.add_parameter("position", rng.normal(0.0, 0.02, size=(positions, dim)))

    @property
    def sequence_length(self) -> int:
        return self.position.shape[0]

    def _stream_rows(self, stream: StreamOutput) -> Tensor:
        tokens = stream.tokens
        if self.token_mode is TokenMode.POOLED:
            tokens = ops.mean(tokens, axis=0, keepdims=True)
        return ops.matmul(tokens, self.projection)

    def forward(self, rgb: StreamOutput, flow: StreamOutput) -> Tensor:
        if rgb.tokens.shape != flow.tokens.shape:
            raise DimensionError(f"stream outputs differ in shape: rgb {rgb.tokens.shape} vs flow {flow.tokens.shape}")
        if rgb.dim != self.dim:
            raise DimensionError(f"stream width {rgb.dim} does not match fusion width {self.dim}")
        if self.token_mode is TokenMode.ALL_TOKENS and rgb.token_count != self.stream_tokens:
            raise DimensionError(f"expected {self.stream_tokens} tokens per stream, got {rgb.token_count}")

        sequence = ops.concat([self.class_token, self._stream_rows(rgb), self._stream_rows(flow)], axis=0)
        return ops.add(sequence, self.position)


def build_fusion_input(rgb: StreamOutput, flow: StreamOutput, params: FusionInput) -> Tensor:
    return params.forward(rgb, flow)
