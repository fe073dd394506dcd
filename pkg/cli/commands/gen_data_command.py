from __future__ import annotations

import argparse

from appsettings import AppSettings
from cli.command import Command
from cli.exit_code import ExitCode
from cli.json_output import print_json
from gamevolt.io.utils import file_digest
from video.dataset_store import write_dataset
from video.synthetic.synthetic_dataset_generator import generate_synthetic_dataset


class GenDataCommand(Command):
    name = "gen-data"
    help = "generate the synthetic moving-shape dataset as PNG frames plus a manifest"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--out", help="dataset root (default: data.root)")

    @classmethod
    def overrides(cls, args: argparse.Namespace, base: AppSettings) -> dict[str, object]:
        return {"data.synthetic.seed": args.seed} if args.seed is not None else {}

    def run(self, args: argparse.Namespace) -> ExitCode:
        root = args.out or self._settings.data.root
        synthetic = self._settings.data.synthetic

        dataset = generate_synthetic_dataset(self._logger, synthetic)
        echo = {"seed": synthetic.seed, "config": synthetic.to_json_like()}
        manifest_path = write_dataset(dataset, root, echo)
        self._logger.info(f"Wrote {len(dataset)} clips to '{root}'.")

        print_json(
            {
                "manifest": str(manifest_path),
                "manifest_sha256": file_digest(manifest_path),
                "counts": dataset.counts(),
                "classes": dataset.class_names,
            }
        )
        return ExitCode.SUCCESS
