from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from autodiff.grad_tape import GradTape
from autodiff.ops import stack
from fusion.two_stream_model import TwoStreamModel
from gamevolt.logging import Logger
from training.batch_prefetcher import BatchPrefetcher
from training.batch_sampler import BatchSampler
from training.checkpoint import Checkpoint, restore_model
from training.errors import EmptyDatasetError
from training.loss import cross_entropy
from training.metrics import Metrics
from training.sample_preparer import SamplePreparer
from video.video_clip import VideoClip


class Evaluator:
    """Eval-mode pass over a clip set; partial final batches are kept."""

    def __init__(self, logger: Logger, preparer: SamplePreparer, batch_size: int, prefetch_depth: int = 0) -> None:
        self._logger = logger
        self._preparer = preparer
        self._batch_size = batch_size
        self._prefetcher = BatchPrefetcher(preparer.prepare, prefetch_depth)

    def evaluate(self, model: TwoStreamModel, clips: Sequence[VideoClip]) -> Metrics:
        if not clips:
            raise EmptyDatasetError("cannot evaluate an empty clip set")
        if any(clip.label is None for clip in clips):
            raise EmptyDatasetError("evaluation clips must all carry a label")

        was_training = model.training
        model.eval()
        batches = BatchSampler(len(clips), self._batch_size, shuffle=False, drop_last=False).batches(0)

        all_logits: list[np.ndarray] = []
        labels: list[int] = []
        loss_total = 0.0
        try:
            with GradTape.suspended():
                for samples in self._prefetcher.iterate(clips, batches):
                    batch_labels = [int(s.label) for s in samples]  # type: ignore[arg-type]
                    logits = stack([model.forward(s.rgb, s.flow) for s in samples])
                    loss_total += cross_entropy(logits, batch_labels).item() * len(samples)
                    all_logits.append(logits.data)
                    labels.extend(batch_labels)
        finally:
            model.train(was_training)

        metrics = Metrics.from_logits(np.concatenate(all_logits), labels, loss_total / len(labels), model.settings.num_classes)
        self._logger.debug(f"Evaluated {len(labels)} clips: top1={metrics.top1:.4f}, loss={metrics.mean_loss:.6f}.")
        return metrics


def evaluate(logger: Logger, checkpoint: Checkpoint, clips: Sequence[VideoClip], batch_size: int = 8, cache_dir: str | None = None) -> Metrics:
    preparer = SamplePreparer(logger, checkpoint.flow, checkpoint.normalization, cache_dir)
    return Evaluator(logger, preparer, batch_size).evaluate(restore_model(checkpoint), clips)
