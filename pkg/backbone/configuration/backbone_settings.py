from dataclasses import dataclass, field

from gamevolt.configuration.settings_base import SettingsBase


@dataclass
class BackboneSettings(SettingsBase):
    patch_size: tuple[int, int, int] = (2, 4, 4)  # (t_p, h_p, w_p)
    embed_dim: int = 64
    heads: int = 4
    pool_strides: list[int] = field(default_factory=lambda: [2, 2, 2])  # one block per stride
    feedforward_dim: int = 128
    dropout: float = 0.0
    output_dim: int = 128
    positional_embedding: bool = True

    @property
    def block_count(self) -> int:
        return len(self.pool_strides)

    def validate(self) -> None:
        if any(p < 1 for p in self.patch_size):
            raise ValueError(f"patch_size must be positive, got {self.patch_size}")
        if self.embed_dim < 1 or self.output_dim < 1 or self.feedforward_dim < 1:
            raise ValueError("embed_dim, output_dim and feedforward_dim must be positive")
        if self.heads < 1 or self.embed_dim % self.heads:
            raise ValueError(f"embed_dim {self.embed_dim} must be divisible by heads {self.heads}")
        if any(s < 1 for s in self.pool_strides):
            raise ValueError(f"pool strides must be >= 1, got {self.pool_strides}")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError(f"dropout must be in [0, 1), got {self.dropout}")
