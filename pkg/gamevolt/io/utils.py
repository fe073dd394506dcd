import hashlib
import json
import os
from pathlib import Path
from typing import Any

import yaml

from gamevolt.io.typing import JsonLike, PathLike, YamlLike


def load_json(path: PathLike) -> JsonLike:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise FileNotFoundError(f"JSON file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ValueError(f"Error decoding JSON file {path} (line {e.lineno}, column {e.colno}): {e.msg}") from None
    except OSError as e:
        raise OSError(f"Failed to load JSON from {path}: {e}") from None


def try_load_json(path: PathLike) -> JsonLike:
    if path and os.path.isfile(path):
        return load_json(path)

    return {}


def save_json(data: Any, path: PathLike, *, indent: int | None = 4) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=indent, ensure_ascii=False, sort_keys=True)
            f.write("\n")
    except OSError as e:
        raise OSError(f"Failed to save JSON to {path}: {e}") from None


def append_json_line(data: JsonLike, path: PathLike) -> None:
    try:
        with open(path, "a", encoding="utf-8") as f:
            f.write(json.dumps(data, sort_keys=True, allow_nan=False))
            f.write("\n")
    except OSError as e:
        raise OSError(f"Failed to append JSON line to {path}: {e}") from None


def load_json_lines(path: PathLike) -> list[JsonLike]:
    records: list[JsonLike] = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise ValueError(f"Error decoding JSON line {line_number} of {path}: {e.msg}") from None
    return records


def load_yaml(path: PathLike) -> YamlLike:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
            return data if data is not None else {}
    except FileNotFoundError:
        raise FileNotFoundError(f"YAML file not found: {path}") from None
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" (line {mark.line + 1}, column {mark.column + 1})" if mark is not None else ""
        raise ValueError(f"Error parsing YAML file {path}{where}: {e}") from None
    except OSError as e:
        raise OSError(f"Failed to load YAML from {path}: {e}") from None


def try_load_yaml(path: PathLike) -> YamlLike:
    if path and os.path.isfile(path):
        return load_yaml(path)

    return {}


def save_yaml(data: YamlLike, path: PathLike) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            yaml.safe_dump(data, f, sort_keys=False, default_flow_style=False)
    except OSError as e:
        raise OSError(f"Failed to save YAML to {path}: {e}") from None


def json_digest(data: Any) -> str:
    """sha256 over the canonical (sorted, compact) JSON form."""
    canonical = json.dumps(data, sort_keys=True, separators=(",", ":"), allow_nan=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def file_digest(path: PathLike) -> str:
    sha = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            sha.update(chunk)
    return sha.hexdigest()


def ensure_dir(path: PathLike) -> Path:
    directory = Path(path)
    directory.mkdir(parents=True, exist_ok=True)
    return directory
