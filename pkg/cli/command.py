from __future__ import annotations

import argparse
from abc import ABC, abstractmethod

from appsettings import AppSettings
from cli.exit_code import ExitCode
from gamevolt.logging import Logger


class Command(ABC):
    name: str
    help: str

    def __init__(self, logger: Logger, settings: AppSettings) -> None:
        self._logger = logger
        self._settings = settings

    @classmethod
    @abstractmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None: ...

    @classmethod
    def overrides(cls, args: argparse.Namespace, base: AppSettings) -> dict[str, object]:
        """Dotted config keys set from command-line flags, given the settings as loaded."""
        return {"train.seed": args.seed} if args.seed is not None else {}

    @abstractmethod
    def run(self, args: argparse.Namespace) -> ExitCode: ...
