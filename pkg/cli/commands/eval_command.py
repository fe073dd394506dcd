from __future__ import annotations

import argparse

from appsettings import AppSettings
from cli.command import Command
from cli.exit_code import ExitCode
from cli.json_output import print_json
from training.checkpoint import load_checkpoint
from training.evaluator import evaluate
from video.dataset_store import read_split


class EvalCommand(Command):
    name = "eval"
    help = "evaluate a checkpoint on a split of a generated dataset; prints metrics JSON"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("checkpoint")
        parser.add_argument("data", nargs="?", help="dataset root (default: data.root)")
        parser.add_argument("--split", default="test")

    @classmethod
    def overrides(cls, args: argparse.Namespace, base: AppSettings) -> dict[str, object]:
        return {}

    def run(self, args: argparse.Namespace) -> ExitCode:
        checkpoint = load_checkpoint(args.checkpoint)
        model = checkpoint.model
        root = args.data or self._settings.data.root
        _, clips = read_split(self._logger, root, args.split, model.height, model.width, model.frames)

        metrics = evaluate(self._logger, checkpoint, clips, self._settings.train.batch_size, self._settings.data.flow_cache_dir)
        self._logger.info(f"{args.split}: top1={metrics.top1:.4f} loss={metrics.mean_loss:.6f} over {metrics.sample_count} clips.")
        print_json({"split": args.split, "checkpoint": args.checkpoint, **metrics.to_json_like()})
        return ExitCode.SUCCESS
