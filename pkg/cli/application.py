from __future__ import annotations

import argparse
import os
from collections.abc import Sequence

from appsettings import AppSettings
from cli.command import Command
from cli.commands.ablate_command import AblateCommand
from cli.commands.eval_command import EvalCommand
from cli.commands.flow_command import FlowCommand
from cli.commands.gen_data_command import GenDataCommand
from cli.commands.predict_command import PredictCommand
from cli.commands.train_command import TrainCommand
from cli.exit_code import ExitCode
from gamevolt.configuration.errors.settings_error import SettingsError
from gamevolt.io.typing import JsonLike
from gamevolt.logging import Logger, get_logger
from training.errors import NonFiniteLossError

DEFAULT_CONFIG = "appsettings.yml"
DEFAULT_ENV_CONFIG = "appsettings.env.yml"

COMMANDS: tuple[type[Command], ...] = (GenDataCommand, FlowCommand, TrainCommand, EvalCommand, PredictCommand, AblateCommand)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="two-stream",
        description="Two-stream (RGB + optical flow) video transformer: data, flow, training and inference.",
    )
    parser.add_argument("--config", help=f"JSON or YAML run config (default: ./{DEFAULT_CONFIG} when present)")
    parser.add_argument("--env-config", dest="env_config", help=f"override file merged on top (default: ./{DEFAULT_ENV_CONFIG})")
    parser.add_argument("--seed", type=int, help="override the run seed")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG")

    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for command in COMMANDS:
        command.configure(subparsers.add_parser(command.name, help=command.help, description=command.help))
    return parser


def _nested(overrides: dict[str, object]) -> JsonLike:
    merged: JsonLike = {}
    for dotted, value in overrides.items():
        merged = AppSettings.merge(merged, AppSettings.nested_override(dotted, value))
    return merged


def load_settings(args: argparse.Namespace, command: type[Command]) -> AppSettings:
    if args.config:
        config_path = args.config
    elif os.path.isfile(DEFAULT_CONFIG):
        config_path = DEFAULT_CONFIG
    else:
        config_path = None

    env_path = args.env_config or DEFAULT_ENV_CONFIG
    base = AppSettings.load(config_path, env_path) if config_path else AppSettings()
    overrides = command.overrides(args, base)
    if not overrides:
        return base
    if config_path:
        return AppSettings.load(config_path, env_path, _nested(overrides))
    return AppSettings.from_json_like(AppSettings.merge(base.to_json_like(), _nested(overrides)))


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    command_type = next(c for c in COMMANDS if c.name == args.command)
    logger: Logger = get_logger(verbose=args.verbose)

    try:
        settings = load_settings(args, command_type)
        logger = get_logger(settings.logging, verbose=args.verbose)
        logger.debug(f"Settings:\n{settings}")
        return int(command_type(logger, settings).run(args))
    except NonFiniteLossError as e:
        logger.error(f"Training aborted: {e}")
        return int(ExitCode.NUMERIC)
    except SettingsError as e:
        logger.error(f"Configuration error: {e}")
        return int(ExitCode.USAGE)
    except (OSError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return int(ExitCode.USAGE)
    except Exception:
        logger.exception(f"Unexpected failure in '{args.command}'.")
        return int(ExitCode.FAILURE)
