from __future__ import annotations

from pathlib import Path

from gamevolt.io.typing import PathLike
from gamevolt.io.utils import append_json_line, ensure_dir
from training.epoch_record import EpochRecord
from training.trainer import Trainer


class EpochLogWriter:
    """Appends one JSON object per completed epoch to a metrics file."""

    def __init__(self, path: PathLike) -> None:
        self._path = Path(path)
        ensure_dir(self._path.parent)
        self._path.write_text("", encoding="utf-8")

    @property
    def path(self) -> Path:
        return self._path

    def attach(self, trainer: Trainer) -> None:
        trainer.epoch_completed.subscribe(self.write)

    def detach(self, trainer: Trainer) -> None:
        trainer.epoch_completed.unsubscribe(self.write)

    def write(self, record: EpochRecord) -> None:
        append_json_line(record.to_json_like(), self._path)
