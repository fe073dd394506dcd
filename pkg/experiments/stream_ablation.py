from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from statistics import median
from typing import Any

from fusion.configuration.model_settings import ModelSettings
from fusion.stream_mode import StreamMode
from fusion.two_stream_model_factory import TwoStreamModelFactory
from gamevolt.logging import Logger
from training.configuration.train_settings import TrainSettings
from training.evaluator import Evaluator
from training.sample_preparer import SamplePreparer
from training.trainer import Trainer
from video.synthetic.synthetic_dataset import SyntheticDataset


@dataclass
class AblationResult:
    seeds: list[int]
    test_top1: dict[StreamMode, list[float]] = field(default_factory=dict)

    def median_top1(self, mode: StreamMode) -> float:
        return median(self.test_top1[mode])

    def fusion_margin(self) -> float:
        """Two-stream median minus the better single-stream median."""
        single = max(self.median_top1(StreamMode.RGB_ONLY), self.median_top1(StreamMode.FLOW_ONLY))
        return self.median_top1(StreamMode.TWO_STREAM) - single

    def to_json_like(self) -> dict[str, Any]:
        return {
            "seeds": self.seeds,
            "test_top1": {mode.name: values for mode, values in self.test_top1.items()},
            "median_top1": {mode.name: self.median_top1(mode) for mode in self.test_top1},
            "fusion_margin": self.fusion_margin(),
        }


def run_stream_ablation(
    logger: Logger,
    model_settings: ModelSettings,
    train_settings: TrainSettings,
    preparer: SamplePreparer,
    dataset: SyntheticDataset,
    seeds: Sequence[int],
    modes: Sequence[StreamMode] = (StreamMode.TWO_STREAM, StreamMode.RGB_ONLY, StreamMode.FLOW_ONLY),
) -> AblationResult:
    """
    Train one model per (mode, seed) and score it on the test split. Single-stream modes
    zero the other stream's tokens at fusion; the flow cache is shared across runs.
    """
    result = AblationResult(list(seeds), {mode: [] for mode in modes})
    evaluator = Evaluator(logger, preparer, train_settings.batch_size, train_settings.prefetch_depth)

    for seed in seeds:
        seeded = replace(train_settings, seed=seed)
        for mode in modes:
            settings = replace(model_settings, fusion=replace(model_settings.fusion, stream_mode=mode))
            model = TwoStreamModelFactory(logger, settings, seeded.dropout).create(seed)
            Trainer(logger, seeded, model, preparer, dataset.class_names).train(dataset.train, dataset.val)
            top1 = evaluator.evaluate(model, dataset.test).top1
            result.test_top1[mode].append(top1)
            logger.info(f"Ablation seed={seed} mode={mode.name}: test top1={top1:.4f}")

    return result
