from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from gamevolt.io.typing import PathLike
from gamevolt.logging import Logger
from video.errors import ClipLoadError
from video.temporal import temporal_subsample_clip
from video.video_clip import VideoClip


def read_frame(path: Path) -> Image.Image:
    try:
        with Image.open(path) as image:
            image.load()
            return image.convert("RGB")
    except (UnidentifiedImageError, OSError, SyntaxError) as e:
        raise ClipLoadError(f"cannot decode frame ({e})", str(path)) from None


def write_frame(path: PathLike, frame: np.ndarray) -> None:
    """Save an H×W×3 frame in [0, 1] as 8-bit RGB PNG."""
    pixels = np.clip(np.rint(np.asarray(frame) * 255.0), 0, 255).astype(np.uint8)
    Image.fromarray(pixels).save(path, format="PNG")


class ClipLoader:
    """Loads a directory of lexicographically ordered PNG frames as a clip."""

    def __init__(self, logger: Logger, height: int, width: int, frames: int | None = None) -> None:
        self._logger = logger
        self._height = height
        self._width = width
        self._frames = frames

    def load(self, path: PathLike, label: int | None = None, clip_id: str | None = None) -> VideoClip:
        directory = Path(path)
        if not directory.is_dir():
            raise ClipLoadError("clip directory not found", str(directory))

        files = sorted(p for p in directory.iterdir() if p.suffix.lower() == ".png")
        if not files:
            raise ClipLoadError("no PNG frames in clip directory", str(directory))

        images = [read_frame(p) for p in files]
        first_size = images[0].size
        for file, image in zip(files, images):
            if image.size != first_size:
                raise ClipLoadError(f"frame size {image.size} differs from {first_size}", str(file))

        target = (self._width, self._height)
        if first_size != target:
            self._logger.debug(f"Resizing {len(images)} frames of '{directory}' from {first_size} to {target}.")
            images = [image.resize(target, Image.Resampling.BILINEAR) for image in images]

        frames = np.stack([np.asarray(image, dtype=np.float64) / 255.0 for image in images])
        clip = VideoClip(frames, label=label, clip_id=clip_id or directory.name)
        return clip if self._frames is None else temporal_subsample_clip(clip, self._frames)


def load_clip_dir(logger: Logger, path: PathLike, height: int, width: int, frames: int | None = None) -> VideoClip:
    return ClipLoader(logger, height, width, frames).load(path)
