from __future__ import annotations

from dataclasses import dataclass, field

from video.video_clip import VideoClip

SPLIT_NAMES = ("train", "val", "test")


@dataclass
class SyntheticDataset:
    class_names: list[str]
    splits: dict[str, list[VideoClip]] = field(default_factory=lambda: {name: [] for name in SPLIT_NAMES})

    @property
    def train(self) -> list[VideoClip]:
        return self.splits["train"]

    @property
    def val(self) -> list[VideoClip]:
        return self.splits["val"]

    @property
    def test(self) -> list[VideoClip]:
        return self.splits["test"]

    def split(self, name: str) -> list[VideoClip]:
        if name not in self.splits:
            raise KeyError(f"unknown split '{name}', expected one of {list(self.splits)}")
        return self.splits[name]

    def counts(self) -> dict[str, int]:
        return {name: len(clips) for name, clips in self.splits.items()}

    def __len__(self) -> int:
        return sum(len(clips) for clips in self.splits.values())
