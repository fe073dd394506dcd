from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any


@dataclass(frozen=True)
class EpochRecord:
    epoch: int
    train_loss: float
    val_loss: float
    val_top1: float
    train_top1: float
    epoch_seconds: float

    def to_json_like(self) -> dict[str, Any]:
        return asdict(self)
