from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Self, cast

import jsonmerge

from gamevolt.configuration.errors.settings_error import SettingsError
from gamevolt.configuration.settings_base import SettingsBase
from gamevolt.io.file_handlers.file_handler import FileHandler
from gamevolt.io.file_handlers.json_file_handler import JsonFileHandler
from gamevolt.io.file_handlers.yaml_file_handler import YamlFileHandler
from gamevolt.io.typing import JsonLike


@dataclass
class AppSettingsBase(SettingsBase):
    name: str

    @classmethod
    def load(
        cls,
        config_file_path: str,
        config_env_file_path: str | None = None,
        overrides: JsonLike | None = None,
        *,
        strict: bool = True,
    ) -> Self:
        """
        Load a settings tree from JSON or YAML.

        The optional env file and the override mapping are deep-merged on top of the
        base document (in that order) before validation, so CLI flags win.
        """
        if not config_file_path:
            raise SettingsError("no config path provided", path="AppSettings")
        if not os.path.isfile(config_file_path):
            raise SettingsError(f"config file not found: '{config_file_path}'", path="AppSettings")

        try:
            merged = cast(JsonLike, cls._pick_handler(config_file_path).load(config_file_path))
        except (OSError, ValueError) as e:
            raise SettingsError(f"failed to load '{config_file_path}': {e}", path="AppSettings") from None

        if config_env_file_path and os.path.isfile(config_env_file_path):
            try:
                env_json = cls._pick_handler(config_env_file_path).try_load(config_env_file_path)
            except (OSError, ValueError) as e:
                raise SettingsError(f"failed to load env override '{config_env_file_path}': {e}", path="AppSettings") from None
            merged = cls.merge(merged, env_json)

        if overrides:
            merged = cls.merge(merged, overrides)

        return cls.from_json_like(merged, strict=strict)

    @staticmethod
    def merge(base: JsonLike, head: JsonLike) -> JsonLike:
        if not head:
            return base
        try:
            return cast(JsonLike, jsonmerge.merge(base, head))  # type: ignore[arg-type]
        except Exception as e:
            raise SettingsError(f"failed to merge overrides {sorted(head)}: {e}", path="AppSettings") from None

    @staticmethod
    def nested_override(dotted_key: str, value: Any) -> JsonLike:
        """'train.seed', 7 -> {'train': {'seed': 7}}"""
        out: JsonLike = {}
        node = out
        *parents, leaf = dotted_key.split(".")
        for part in parents:
            node[part] = {}
            node = node[part]
        node[leaf] = value
        return out

    @staticmethod
    def _pick_handler(path: str) -> FileHandler:
        for handler in (JsonFileHandler(), YamlFileHandler()):
            if handler.handles(path):
                return handler

        # Fallback: sniff first non-space byte to guess JSON vs YAML
        try:
            with open(path, "rb") as f:
                head = f.read(64).lstrip()
        except OSError as e:
            raise SettingsError(f"cannot open '{path}': {e}", path="AppSettings") from None

        if head.startswith(b"{") or head.startswith(b"["):
            return JsonFileHandler()
        return YamlFileHandler()
