from __future__ import annotations

import argparse

from cli.command import Command
from cli.dataset_source import open_dataset
from cli.exit_code import ExitCode
from cli.json_output import print_json
from experiments.stream_ablation import run_stream_ablation
from training.sample_preparer import SamplePreparer


class AblateCommand(Command):
    name = "ablate"
    help = "train two-stream, RGB-only and flow-only models per seed; prints test top-1 medians"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--data", help="dataset root (default: data.root)")
        parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])

    def run(self, args: argparse.Namespace) -> ExitCode:
        s = self._settings
        dataset = open_dataset(self._logger, s, args.data)
        preparer = SamplePreparer(self._logger, s.flow, s.data.normalization, s.data.flow_cache_dir)

        result = run_stream_ablation(self._logger, s.model, s.train, preparer, dataset, args.seeds)
        self._logger.info(f"Fusion margin over the best single stream: {result.fusion_margin():+.4f}")
        print_json(result.to_json_like())
        return ExitCode.SUCCESS
