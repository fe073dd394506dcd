from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from autodiff.tensor import FloatArray


def predictions(logits: FloatArray) -> np.ndarray:
    """Row-wise argmax; np.argmax returns the first maximum, so ties go to the lowest index."""
    return np.argmax(logits, axis=1)


def top1_accuracy(logits: FloatArray, labels: Sequence[int]) -> float:
    if logits.ndim != 2 or logits.shape[0] != len(labels):
        raise ValueError(f"top1_accuracy: logits {logits.shape} do not match {len(labels)} labels")
    if not len(labels):
        return 0.0
    return float(np.mean(predictions(logits) == np.asarray(labels)))


@dataclass(frozen=True)
class Metrics:
    top1: float
    mean_loss: float
    per_class_accuracy: list[float | None] = field(default_factory=list)  # None for classes without samples
    sample_count: int = 0

    @classmethod
    def from_logits(cls, logits: FloatArray, labels: Sequence[int], mean_loss: float, num_classes: int) -> Metrics:
        label_array = np.asarray(labels)
        correct = predictions(logits) == label_array
        per_class: list[float | None] = []
        for k in range(num_classes):
            members = label_array == k
            per_class.append(float(np.mean(correct[members])) if members.any() else None)
        return cls(top1_accuracy(logits, labels), mean_loss, per_class, len(labels))

    def to_json_like(self) -> dict[str, Any]:
        return {
            "top1": self.top1,
            "mean_loss": self.mean_loss,
            "per_class_accuracy": self.per_class_accuracy,
            "sample_count": self.sample_count,
        }
