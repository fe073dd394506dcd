from __future__ import annotations

import argparse
from pathlib import Path

from appsettings import AppSettings
from cli.command import Command
from cli.dataset_source import open_dataset
from cli.exit_code import ExitCode
from cli.json_output import print_json
from fusion.two_stream_model_factory import TwoStreamModelFactory
from gamevolt.io.utils import ensure_dir
from training.checkpoint import save_checkpoint
from training.epoch_log_writer import EpochLogWriter
from training.sample_preparer import SamplePreparer
from training.trainer import Trainer
from video.errors import DatasetConfigError

CHECKPOINT_NAME = "checkpoint.tsvt"
METRICS_NAME = "metrics.jsonl"


class TrainCommand(Command):
    name = "train"
    help = "train the two-stream model; writes <out>/checkpoint.tsvt and <out>/metrics.jsonl"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--data", help="dataset root (default: data.root)")
        parser.add_argument("--max-epochs", type=int, dest="max_epochs")
        parser.add_argument("--out", help="output directory (default: train.out_dir)")

    @classmethod
    def overrides(cls, args: argparse.Namespace, base: AppSettings) -> dict[str, object]:
        overrides = super().overrides(args, base)
        if args.max_epochs is not None:
            overrides["train.max_epochs"] = args.max_epochs
            overrides["train.patience"] = min(base.train.patience, args.max_epochs)
        if args.out is not None:
            overrides["train.out_dir"] = args.out
        return overrides

    def run(self, args: argparse.Namespace) -> ExitCode:
        s = self._settings
        dataset = open_dataset(self._logger, s, args.data)
        if len(dataset.class_names) != s.model.num_classes:
            raise DatasetConfigError(f"dataset has {len(dataset.class_names)} classes but model.num_classes is {s.model.num_classes}")

        out_dir = ensure_dir(s.train.out_dir)
        preparer = SamplePreparer(self._logger, s.flow, s.data.normalization, s.data.flow_cache_dir)
        model = TwoStreamModelFactory(self._logger, s.model, s.train.dropout).create(s.train.seed)
        trainer = Trainer(self._logger, s.train, model, preparer, dataset.class_names)

        log_writer = EpochLogWriter(Path(out_dir) / METRICS_NAME)
        log_writer.attach(trainer)
        try:
            result = trainer.train(dataset.train, dataset.val)
        finally:
            log_writer.detach(trainer)

        checkpoint_path = Path(out_dir) / CHECKPOINT_NAME
        save_checkpoint(result.checkpoint, checkpoint_path)
        self._logger.info(f"Saved best checkpoint (epoch {result.checkpoint.epoch}) to '{checkpoint_path}'.")

        print_json(
            {
                "checkpoint": str(checkpoint_path),
                "metrics": str(log_writer.path),
                "epochs": result.epochs_run,
                "best_epoch": result.checkpoint.epoch,
                "best_val_loss": result.checkpoint.best_val_loss,
                "stopped_early": result.stopped_early,
            }
        )
        return ExitCode.SUCCESS
