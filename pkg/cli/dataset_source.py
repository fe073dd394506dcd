from __future__ import annotations

from pathlib import Path

from appsettings import AppSettings
from gamevolt.logging import Logger
from video.dataset_store import MANIFEST_NAME, read_dataset
from video.errors import DatasetConfigError
from video.synthetic.synthetic_dataset import SyntheticDataset
from video.synthetic.synthetic_dataset_generator import generate_synthetic_dataset


def open_dataset(logger: Logger, settings: AppSettings, root: str | None = None) -> SyntheticDataset:
    """Generated dataset at root when it has a manifest, otherwise generated in memory from data.synthetic."""
    root = root or settings.data.root
    model = settings.model
    if (Path(root) / MANIFEST_NAME).is_file():
        return read_dataset(logger, root, model.height, model.width, model.frames)

    synthetic = settings.data.synthetic
    if (synthetic.frames, synthetic.height, synthetic.width) != (model.frames, model.height, model.width):
        raise DatasetConfigError(
            f"data.synthetic geometry {(synthetic.frames, synthetic.height, synthetic.width)} does not match "
            f"model geometry {(model.frames, model.height, model.width)}"
        )

    logger.info(f"No dataset manifest under '{root}'; generating the synthetic dataset in memory.")
    return generate_synthetic_dataset(logger, synthetic)
