from dataclasses import dataclass

from fusion.stream_mode import StreamMode
from fusion.token_mode import TokenMode
from gamevolt.configuration.settings_base import SettingsBase


@dataclass
class FusionSettings(SettingsBase):
    heads: int = 8
    feedforward_dim: int = 1024
    encoder_layers: int = 1
    encoder_dropout: float = 0.1
    token_mode: TokenMode = TokenMode.POOLED
    stream_mode: StreamMode = StreamMode.TWO_STREAM

    def validate(self) -> None:
        if self.heads < 1:
            raise ValueError(f"heads must be >= 1, got {self.heads}")
        if self.feedforward_dim < 1 or self.encoder_layers < 1:
            raise ValueError("feedforward_dim and encoder_layers must be positive")
        if not 0.0 <= self.encoder_dropout < 1.0:
            raise ValueError(f"encoder_dropout must be in [0, 1), got {self.encoder_dropout}")
