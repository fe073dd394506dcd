from __future__ import annotations

import math
import time
from collections.abc import Callable, Sequence

import numpy as np

from autodiff.adam_optimizer import AdamOptimizer
from autodiff.grad_tape import GradTape
from autodiff.ops import stack
from fusion.two_stream_model import TwoStreamModel
from gamevolt.events.event import Event
from gamevolt.logging import Logger
from training.batch_prefetcher import BatchPrefetcher
from training.batch_sampler import BatchSampler
from training.checkpoint import Checkpoint
from training.configuration.train_settings import TrainSettings
from training.early_stopping import EarlyStopping
from training.epoch_record import EpochRecord
from training.errors import EmptyDatasetError, NonFiniteLossError
from training.evaluator import Evaluator
from training.loss import cross_entropy
from training.metrics import predictions
from training.sample_preparer import SamplePreparer
from training.training_result import TrainingResult
from video.video_clip import VideoClip


class Trainer:
    """
    Adam on cross-entropy with early stopping on validation loss. The returned
    checkpoint holds the parameters of the best validation epoch, and the model is
    left holding them too.
    """

    def __init__(
        self,
        logger: Logger,
        settings: TrainSettings,
        model: TwoStreamModel,
        preparer: SamplePreparer,
        class_names: Sequence[str],
    ) -> None:
        self._logger = logger
        self._settings = settings
        self._model = model
        self._preparer = preparer
        self._class_names = list(class_names)

        self.optimizer = AdamOptimizer(
            dict(model.named_parameters()),
            learning_rate=settings.learning_rate,
            beta1=settings.beta1,
            beta2=settings.beta2,
            eps=settings.eps,
        )
        self._prefetcher = BatchPrefetcher(preparer.prepare, settings.prefetch_depth)
        self._evaluator = Evaluator(logger, preparer, settings.batch_size, settings.prefetch_depth)

        self.epoch_completed: Event[Callable[[EpochRecord], None]] = Event()
        self.batch_completed: Event[Callable[[int, int, float], None]] = Event()

    def _train_epoch(self, epoch: int, clips: Sequence[VideoClip], sampler: BatchSampler) -> tuple[float, float]:
        self._model.train()
        loss_total = 0.0
        correct = 0
        seen = 0

        for batch_index, samples in enumerate(self._prefetcher.iterate(clips, sampler.batches(epoch)), start=1):
            labels = [int(s.label) for s in samples]  # type: ignore[arg-type]
            self.optimizer.zero_grad()

            with GradTape() as tape:
                logits = stack([self._model.forward(s.rgb, s.flow) for s in samples])
                loss = cross_entropy(logits, labels)

            value = loss.item()
            if not math.isfinite(value):
                raise NonFiniteLossError(epoch, batch_index, value)

            tape.backward(loss)
            self.optimizer.step()

            loss_total += value * len(samples)
            correct += int(np.sum(predictions(logits.data) == np.asarray(labels)))
            seen += len(samples)
            self._logger.trace(f"epoch {epoch} batch {batch_index}: loss={value:.6f}")
            self.batch_completed.invoke(epoch, batch_index, value)

        return loss_total / seen, correct / seen

    def _snapshot(self, epoch: int, best_loss: float) -> Checkpoint:
        return Checkpoint(
            model=self._model.settings,
            class_names=self._class_names,
            parameters=self._model.state_dict(),
            epoch=epoch,
            best_val_loss=best_loss,
            head_dropout=self._settings.dropout,
            flow=self._preparer.flow_settings,
            normalization=self._preparer.normalization,
            optimizer=self.optimizer.state_dict(),
        )

    def train(self, train_clips: Sequence[VideoClip], val_clips: Sequence[VideoClip]) -> TrainingResult:
        if not train_clips:
            raise EmptyDatasetError("training split is empty")
        if not val_clips:
            raise EmptyDatasetError("validation split is empty")

        s = self._settings
        sampler = BatchSampler(len(train_clips), s.batch_size, shuffle=True, drop_last=True, seed=s.seed)
        stopper = EarlyStopping(s.patience)
        best: Checkpoint | None = None
        history: list[EpochRecord] = []

        self._logger.info(
            f"Training on {len(train_clips)} clips ({len(val_clips)} validation), "
            f"{self._model.parameter_count()} parameters, up to {s.max_epochs} epochs."
        )

        for epoch in range(1, s.max_epochs + 1):
            started = time.perf_counter()
            train_loss, train_top1 = self._train_epoch(epoch, train_clips, sampler)
            val_metrics = self._evaluator.evaluate(self._model, val_clips)

            if stopper.update(epoch, val_metrics.mean_loss):
                best = self._snapshot(epoch, val_metrics.mean_loss)

            record = EpochRecord(epoch, train_loss, val_metrics.mean_loss, val_metrics.top1, train_top1, time.perf_counter() - started)
            history.append(record)
            self._logger.info(
                f"Epoch {epoch}: train_loss={train_loss:.6f} train_top1={train_top1:.4f} "
                f"val_loss={val_metrics.mean_loss:.6f} val_top1={val_metrics.top1:.4f}"
            )
            self.epoch_completed.invoke(record)

            if stopper.should_stop:
                self._logger.info(f"No validation improvement for {s.patience} epochs; best epoch {stopper.best_epoch}.")
                break

        if best is None:
            # every validation loss was NaN
            raise NonFiniteLossError(len(history), 0, val_metrics.mean_loss)

        self._model.load_state_dict(best.parameters)
        return TrainingResult(best, history, stopped_early=stopper.should_stop)
