from __future__ import annotations

import numpy as np

from autodiff import ops
from autodiff.grad_tape import GradTape
from autodiff.module import Module
from autodiff.tensor import FloatArray, Tensor
from backbone.stream_encoder import StreamEncoder
from backbone.stream_output import StreamOutput
from fusion.classifier_head import ClassifierHead
from fusion.configuration.model_settings import ModelSettings
from fusion.encoder_layer import EncoderLayer
from fusion.fusion_input import FusionInput
from fusion.stream_mode import StreamMode


class TwoStreamModel(Module):
    """
    RGB and flow-RGB clips are encoded by separate backbones, fused with a class token
    and positional table, passed through the global encoder and classified from the
    class-token row.
    """

    def __init__(self, settings: ModelSettings, head_dropout: float, rng: np.random.Generator) -> None:
        super().__init__()
        self.settings = settings
        self.stream_mode = settings.fusion.stream_mode
        dim = settings.dim

        self.rgb_encoder = self.add_child("rgb_encoder", StreamEncoder(settings.backbone, settings.clip_shape, rng))
        self.flow_encoder = self.add_child("flow_encoder", StreamEncoder(settings.backbone, settings.clip_shape, rng))
        stream_tokens, _ = self.rgb_encoder.output_shape

        self.fusion_input = self.add_child("fusion_input", FusionInput(dim, stream_tokens, settings.fusion.token_mode, rng))
        self.encoder_layers = [
            self.add_child(
                f"encoder{i}",
                EncoderLayer(dim, settings.fusion.heads, settings.fusion.feedforward_dim, settings.fusion.encoder_dropout, rng),
            )
            for i in range(settings.fusion.encoder_layers)
        ]
        self.head = self.add_child("head", ClassifierHead(dim, settings.num_classes, head_dropout, rng))

    def _encode(self, encoder: StreamEncoder, clip: FloatArray, active: bool) -> StreamOutput:
        if active:
            return encoder.forward(clip)
        return StreamOutput(Tensor.zeros(encoder.output_shape))

    def encode_streams(self, rgb: FloatArray, flow: FloatArray) -> tuple[StreamOutput, StreamOutput]:
        rgb_out = self._encode(self.rgb_encoder, rgb, self.stream_mode is not StreamMode.FLOW_ONLY)
        flow_out = self._encode(self.flow_encoder, flow, self.stream_mode is not StreamMode.RGB_ONLY)
        return rgb_out, flow_out

    def fuse(self, rgb: StreamOutput, flow: StreamOutput) -> Tensor:
        x = self.fusion_input.forward(rgb, flow)
        for layer in self.encoder_layers:
            x = layer.forward(x)
        return self.head.forward(x)

    def forward(self, rgb: FloatArray, flow: FloatArray) -> Tensor:
        """Logits [K] for one sample of normalized RGB frames and normalized flow-RGB frames."""
        return self.fuse(*self.encode_streams(rgb, flow))

    def predict_probabilities(self, rgb: FloatArray, flow: FloatArray) -> FloatArray:
        was_training = self.training
        self.eval()
        try:
            with GradTape.suspended():
                probabilities = ops.softmax(self.forward(rgb, flow)).data
        finally:
            self.train(was_training)
        return probabilities
