from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np
from PIL import Image

from appsettings import AppSettings
from cli.command import Command
from cli.exit_code import ExitCode
from cli.json_output import print_json
from optical_flow.colour_wheel import flow_to_rgb8
from optical_flow.flo2_codec import write_flo2
from optical_flow.horn_schunck_estimator import HornSchunckEstimator
from video.clip_loader import read_frame
from video.errors import ClipLoadError


class FlowCommand(Command):
    name = "flow"
    help = "estimate flow between two PNG frames; writes <prefix>.flo2 and <prefix>.png"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("image1")
        parser.add_argument("image2")
        parser.add_argument("prefix", help="output path prefix")

    @classmethod
    def overrides(cls, args: argparse.Namespace, base: AppSettings) -> dict[str, object]:
        return {}

    def run(self, args: argparse.Namespace) -> ExitCode:
        frames = []
        for path in (Path(args.image1), Path(args.image2)):
            if not path.is_file():
                raise ClipLoadError("image not found", str(path))
            frames.append(np.asarray(read_frame(path), dtype=np.float64) / 255.0)

        flow = HornSchunckEstimator(self._settings.flow).estimate(frames[0], frames[1])

        prefix = Path(args.prefix)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        flo2_path = prefix.with_name(prefix.name + ".flo2")
        png_path = prefix.with_name(prefix.name + ".png")
        write_flo2(flo2_path, flow)
        Image.fromarray(flow_to_rgb8(flow, self._settings.flow.max_norm)).save(png_path, format="PNG")

        mean = flow.vectors.reshape(-1, 2).mean(axis=0)
        self._logger.info(f"Flow {flow.height}x{flow.width}: mean displacement ({mean[0]:.3f}, {mean[1]:.3f}).")
        print_json(
            {
                "flo2": str(flo2_path),
                "png": str(png_path),
                "height": flow.height,
                "width": flow.width,
                "mean_flow": [float(mean[0]), float(mean[1])],
                "max_magnitude": float(flow.magnitude().max()),
            }
        )
        return ExitCode.SUCCESS
