from dataclasses import dataclass, field

from backbone.configuration.backbone_settings import BackboneSettings
from fusion.configuration.fusion_settings import FusionSettings
from gamevolt.configuration.settings_base import SettingsBase


@dataclass
class ModelSettings(SettingsBase):
    frames: int = 8
    height: int = 32
    width: int = 32
    num_classes: int = 8
    backbone: BackboneSettings = field(default_factory=BackboneSettings)
    fusion: FusionSettings = field(default_factory=FusionSettings)

    @property
    def clip_shape(self) -> tuple[int, int, int, int]:
        return self.frames, self.height, self.width, 3

    @property
    def dim(self) -> int:
        """Fusion width D, equal to the backbone output channels D_o."""
        return self.backbone.output_dim

    def validate(self) -> None:
        if min(self.frames, self.height, self.width) < 1:
            raise ValueError(f"clip geometry must be positive, got {self.clip_shape[:3]}")
        if self.num_classes < 2:
            raise ValueError(f"num_classes must be >= 2, got {self.num_classes}")
        if self.dim % self.fusion.heads:
            raise ValueError(f"backbone.output_dim {self.dim} must be divisible by fusion.heads {self.fusion.heads}")
        for axis, extent, patch in zip(("frames", "height", "width"), self.clip_shape, self.backbone.patch_size):
            if extent % patch:
                raise ValueError(f"{axis}={extent} is not divisible by patch extent {patch}")
