from __future__ import annotations

from pathlib import Path
from typing import Any

from gamevolt.io.typing import PathLike
from gamevolt.io.utils import ensure_dir, load_json, save_json
from gamevolt.logging import Logger
from video.clip_loader import ClipLoader, write_frame
from video.errors import DatasetConfigError
from video.synthetic.synthetic_dataset import SyntheticDataset
from video.video_clip import VideoClip

MANIFEST_NAME = "manifest.json"
FRAME_PATTERN = "frame_{:04d}.png"


def write_dataset(dataset: SyntheticDataset, root: PathLike, echo: dict[str, Any] | None = None) -> Path:
    """
    Lay out <root>/<split>/<class>/<clip-id>/frame_%04d.png and a manifest listing
    classes, splits and the generating configuration.
    """
    root_dir = ensure_dir(root)
    splits: dict[str, list[dict[str, Any]]] = {}

    for split, clips in dataset.splits.items():
        entries: list[dict[str, Any]] = []
        for clip in clips:
            if clip.label is None or clip.clip_id is None:
                raise DatasetConfigError(f"clip in split '{split}' needs a label and an id to be stored")
            relative = Path(split) / dataset.class_names[clip.label] / clip.clip_id
            clip_dir = ensure_dir(root_dir / relative)
            for t, frame in enumerate(clip.frames):
                write_frame(clip_dir / FRAME_PATTERN.format(t), frame)
            entry: dict[str, Any] = {"clip_id": clip.clip_id, "label": clip.label, "path": relative.as_posix()}
            if clip.displacement is not None:
                entry["displacement"] = list(clip.displacement)
            entries.append(entry)
        splits[split] = entries

    manifest = {"classes": dataset.class_names, "splits": splits, **(echo or {})}
    manifest_path = root_dir / MANIFEST_NAME
    save_json(manifest, manifest_path)
    return manifest_path


def load_manifest(root: PathLike) -> dict[str, Any]:
    path = Path(root) / MANIFEST_NAME
    if not path.is_file():
        raise FileNotFoundError(f"dataset manifest not found: {path}")
    manifest = load_json(path)
    if "classes" not in manifest or "splits" not in manifest:
        raise DatasetConfigError(f"{path} is missing 'classes' or 'splits'")
    return manifest


def read_split(logger: Logger, root: PathLike, split: str, height: int, width: int, frames: int | None = None) -> tuple[list[str], list[VideoClip]]:
    manifest = load_manifest(root)
    if split not in manifest["splits"]:
        raise DatasetConfigError(f"split '{split}' not in manifest (have {sorted(manifest['splits'])})")

    loader = ClipLoader(logger, height, width, frames)
    clips: list[VideoClip] = []
    for entry in manifest["splits"][split]:
        clip = loader.load(Path(root) / entry["path"], label=int(entry["label"]), clip_id=entry["clip_id"])
        if "displacement" in entry:
            dx, dy = entry["displacement"]
            clip = VideoClip(clip.frames, clip.label, clip.clip_id, (int(dx), int(dy)))
        clips.append(clip)
    return list(manifest["classes"]), clips


def read_dataset(logger: Logger, root: PathLike, height: int, width: int, frames: int | None = None) -> SyntheticDataset:
    manifest = load_manifest(root)
    dataset = SyntheticDataset(list(manifest["classes"]))
    for split in manifest["splits"]:
        _, dataset.splits[split] = read_split(logger, root, split, height, width, frames)
    logger.info(f"Read {len(dataset)} clips from '{root}': {dataset.counts()}.")
    return dataset
