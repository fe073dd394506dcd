from dataclasses import dataclass, field

from gamevolt.configuration.settings_base import SettingsBase
from video.synthetic.motion_direction import MotionDirection
from video.synthetic.shape_kind import ShapeKind


@dataclass
class SynthDatasetSettings(SettingsBase):
    """Classes are every (appearance, motion) pair, appearance-major."""

    appearances: list[ShapeKind] = field(default_factory=lambda: [ShapeKind.SQUARE, ShapeKind.DISC])
    motions: list[MotionDirection] = field(
        default_factory=lambda: [MotionDirection.EAST, MotionDirection.NORTH, MotionDirection.WEST, MotionDirection.SOUTH]
    )
    clips_per_class: int = 30
    frames: int = 8
    height: int = 32
    width: int = 32
    shape_size: int = 10
    speed: int = 2  # pixels per frame
    noise: float = 0.05
    seed: int = 0
    train_fraction: float = 0.7
    val_fraction: float = 0.1
    foreground: list[float] = field(default_factory=lambda: [0.9, 0.8, 0.3])
    background: list[float] = field(default_factory=lambda: [0.25, 0.3, 0.35])

    @property
    def class_count(self) -> int:
        return len(self.appearances) * len(self.motions)

    def validate(self) -> None:
        if self.class_count < 2:
            raise ValueError(f"need at least 2 classes, got {self.class_count}")
        if len(set(self.appearances)) != len(self.appearances) or len(set(self.motions)) != len(self.motions):
            raise ValueError("appearances and motions must not repeat")
        if not 0.0 <= self.noise <= 0.5:
            raise ValueError(f"noise must be in [0, 0.5], got {self.noise}")
        if self.clips_per_class < 1 or self.frames < 1 or self.shape_size < 1:
            raise ValueError("clips_per_class, frames and shape_size must be >= 1")
        if self.speed < 1:
            raise ValueError(f"speed must be >= 1 pixel per frame, got {self.speed}")
        if not (0.0 < self.train_fraction and 0.0 <= self.val_fraction and self.train_fraction + self.val_fraction <= 1.0):
            raise ValueError(f"invalid split fractions train={self.train_fraction}, val={self.val_fraction}")
        if len(self.foreground) != 3 or len(self.background) != 3:
            raise ValueError("foreground and background need one value per RGB channel")
