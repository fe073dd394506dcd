from __future__ import annotations

import numpy as np

from autodiff.rng import spawn_generator
from autodiff.tensor import FloatArray
from gamevolt.logging import Logger
from video.configuration.synth_dataset_settings import SynthDatasetSettings
from video.errors import DatasetConfigError
from video.synthetic.motion_direction import MotionDirection
from video.synthetic.shape_kind import ShapeKind
from video.synthetic.synthetic_dataset import SyntheticDataset
from video.video_clip import VideoClip

_CLIP_STREAM = 1
_SPLIT_STREAM = 2


def class_name(appearance: ShapeKind, motion: MotionDirection) -> str:
    return f"{appearance.name.lower()}-{motion.name.lower()}"


class SyntheticDatasetGenerator:
    """
    Moving-shape clips where appearance (shape) and motion (compass heading) are
    independent factors, so some class pairs differ only in motion and others only
    in appearance.
    """

    def __init__(self, logger: Logger, settings: SynthDatasetSettings) -> None:
        self._logger = logger
        self._settings = settings
        self._check_geometry()

    @property
    def classes(self) -> list[tuple[ShapeKind, MotionDirection]]:
        return [(a, m) for a in self._settings.appearances for m in self._settings.motions]

    @property
    def class_names(self) -> list[str]:
        return [class_name(a, m) for a, m in self.classes]

    def _check_geometry(self) -> None:
        s = self._settings
        if s.shape_size > s.height or s.shape_size > s.width:
            raise DatasetConfigError(f"shape_size {s.shape_size} does not fit a {s.height}x{s.width} frame")

        travel = s.speed * (s.frames - 1)
        for motion in s.motions:
            if motion.dx and s.width - s.shape_size < travel:
                raise DatasetConfigError(f"{motion.name} travel of {travel}px leaves a {s.width}px wide frame")
            if motion.dy and s.height - s.shape_size < travel:
                raise DatasetConfigError(f"{motion.name} travel of {travel}px leaves a {s.height}px high frame")

    def _start(self, extent: int, step: int, rng: np.random.Generator) -> int:
        free = extent - self._settings.shape_size
        travel = self._settings.speed * (self._settings.frames - 1)
        low, high = (travel, free) if step < 0 else (0, free - travel) if step > 0 else (0, free)
        return int(rng.integers(low, high + 1))

    def render_clip(self, label: int, index: int) -> VideoClip:
        s = self._settings
        appearance, motion = self.classes[label]
        rng = spawn_generator(s.seed, _CLIP_STREAM, label, index)

        texture = rng.uniform(-1.0, 1.0, size=(s.height, s.width, 1))
        background: FloatArray = np.clip(np.asarray(s.background) + s.noise * texture, 0.0, 1.0)
        x0 = self._start(s.width, motion.dx, rng)
        y0 = self._start(s.height, motion.dy, rng)

        mask = appearance.mask(s.shape_size)
        frames = np.repeat(background[None], s.frames, axis=0)
        for t in range(s.frames):
            x = x0 + motion.dx * s.speed * t
            y = y0 + motion.dy * s.speed * t
            patch = frames[t, y : y + s.shape_size, x : x + s.shape_size]
            patch[mask] = s.foreground

        return VideoClip(
            frames,
            label=label,
            clip_id=f"{class_name(appearance, motion)}-{index:04d}",
            displacement=(motion.dx * s.speed, motion.dy * s.speed),
        )

    def generate(self) -> SyntheticDataset:
        s = self._settings
        dataset = SyntheticDataset(self.class_names)

        for label in range(len(self.classes)):
            order = spawn_generator(s.seed, _SPLIT_STREAM, label).permutation(s.clips_per_class)
            train_count = round(s.clips_per_class * s.train_fraction)
            val_count = min(round(s.clips_per_class * s.val_fraction), s.clips_per_class - train_count)

            for position, index in enumerate(order):
                split = "train" if position < train_count else "val" if position < train_count + val_count else "test"
                dataset.splits[split].append(self.render_clip(label, int(index)))

        self._logger.info(f"Generated {len(dataset)} synthetic clips over {len(self.classes)} classes: {dataset.counts()}.")
        return dataset


def generate_synthetic_dataset(logger: Logger, settings: SynthDatasetSettings) -> SyntheticDataset:
    return SyntheticDatasetGenerator(logger, settings).generate()
