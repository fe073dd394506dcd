from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from autodiff.tensor import FloatArray
from gamevolt.logging import Logger
from training.checkpoint import Checkpoint, restore_model
from training.sample_preparer import SamplePreparer
from video.video_clip import VideoClip


@dataclass(frozen=True)
class Prediction:
    class_index: int
    class_name: str
    probability: float
    probabilities: FloatArray

    def to_json_like(self) -> dict[str, Any]:
        return {
            "class": self.class_name,
            "class_index": self.class_index,
            "probability": self.probability,
            "probabilities": [float(p) for p in self.probabilities],
        }


class Predictor:
    def __init__(self, logger: Logger, checkpoint: Checkpoint) -> None:
        self._logger = logger
        self._class_names = checkpoint.class_names
        self._model = restore_model(checkpoint)
        self._preparer = SamplePreparer(logger, checkpoint.flow, checkpoint.normalization)

    def predict(self, clip: VideoClip) -> Prediction:
        sample = self._preparer.prepare(clip)
        probabilities = self._model.predict_probabilities(sample.rgb, sample.flow)
        index = int(np.argmax(probabilities))
        self._logger.debug(f"Predicted '{self._class_names[index]}' for '{clip.clip_id}' (p={probabilities[index]:.4f}).")
        return Prediction(index, self._class_names[index], float(probabilities[index]), probabilities)
