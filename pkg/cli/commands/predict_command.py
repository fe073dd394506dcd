from __future__ import annotations

import argparse

from appsettings import AppSettings
from cli.command import Command
from cli.exit_code import ExitCode
from cli.json_output import print_json
from training.checkpoint import load_checkpoint
from training.predictor import Predictor
from video.clip_loader import load_clip_dir


class PredictCommand(Command):
    name = "predict"
    help = "classify one clip directory of PNG frames; prints {class, probability} JSON"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("checkpoint")
        parser.add_argument("clip_dir")

    @classmethod
    def overrides(cls, args: argparse.Namespace, base: AppSettings) -> dict[str, object]:
        return {}

    def run(self, args: argparse.Namespace) -> ExitCode:
        checkpoint = load_checkpoint(args.checkpoint)
        model = checkpoint.model
        clip = load_clip_dir(self._logger, args.clip_dir, model.height, model.width, model.frames)

        prediction = Predictor(self._logger, checkpoint).predict(clip)
        print_json(prediction.to_json_like())
        return ExitCode.SUCCESS
