from __future__ import annotations

from dataclasses import dataclass, replace

from autodiff.errors import DimensionError
from autodiff.tensor import FloatArray


@dataclass(frozen=True)
class VideoClip:
    frames: FloatArray  # T×H×W×3
    label: int | None = None
    clip_id: str | None = None
    displacement: tuple[int, int] | None = None  # ground-truth (dx, dy) per frame, synthetic clips only

    def __post_init__(self) -> None:
        if self.frames.ndim != 4 or self.frames.shape[0] < 1 or self.frames.shape[3] != 3:
            raise DimensionError(f"clip frames must be T×H×W×3 with T >= 1, got {self.frames.shape}")

    @property
    def frame_count(self) -> int:
        return self.frames.shape[0]

    @property
    def frame_size(self) -> tuple[int, int]:
        return self.frames.shape[1], self.frames.shape[2]

    def with_frames(self, frames: FloatArray) -> VideoClip:
        return replace(self, frames=frames)
