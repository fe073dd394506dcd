from __future__ import annotations

import json
import struct
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from autodiff.rng import create_generator
from autodiff.tensor import FloatArray
from fusion.configuration.model_settings import ModelSettings
from fusion.two_stream_model import TwoStreamModel
from gamevolt.configuration.errors.settings_error import SettingsError
from gamevolt.io.typing import PathLike
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from training.errors import CheckpointFormatError
from video.configuration.normalization_spec import NormalizationSpec

MAGIC = b"TSVT"
VERSION = 1
_PREAMBLE = struct.Struct("<4sII")  # magic, version, header byte length


@dataclass
class Checkpoint:
    model: ModelSettings
    class_names: list[str]
    parameters: dict[str, FloatArray]
    epoch: int
    best_val_loss: float
    head_dropout: float = 0.5
    flow: FlowSolverSettings = field(default_factory=FlowSolverSettings)
    normalization: NormalizationSpec = field(default_factory=NormalizationSpec)
    optimizer: dict[str, dict[str, Any]] = field(default_factory=dict)  # name -> {m, v, t}
    version: int = VERSION


def _block_table(blocks: list[tuple[str, FloatArray]]) -> tuple[list[dict[str, Any]], int]:
    table: list[dict[str, Any]] = []
    offset = 0
    for name, values in blocks:
        table.append({"name": name, "shape": list(values.shape), "offset": offset})
        offset += values.size * 8
    return table, offset


def encode_checkpoint(checkpoint: Checkpoint) -> bytes:
    parameter_blocks = list(checkpoint.parameters.items())
    moment_blocks = [
        (f"{name}/{kind}", np.asarray(state[kind], dtype=np.float64)) for name, state in checkpoint.optimizer.items() for kind in ("m", "v")
    ]
    parameter_table, parameter_bytes = _block_table(parameter_blocks)
    moment_table, _ = _block_table(moment_blocks)
    for entry in moment_table:
        entry["offset"] += parameter_bytes

    header = {
        "version": checkpoint.version,
        "model": checkpoint.model.to_json_like(),
        "class_names": checkpoint.class_names,
        "epoch": checkpoint.epoch,
        "best_val_loss": checkpoint.best_val_loss,
        "head_dropout": checkpoint.head_dropout,
        "flow": checkpoint.flow.to_json_like(),
        "normalization": checkpoint.normalization.to_json_like(),
        "parameters": parameter_table,
        "optimizer": {"steps": {name: int(state["t"]) for name, state in checkpoint.optimizer.items()}, "moments": moment_table},
    }
    header_bytes = json.dumps(header, sort_keys=True, allow_nan=False).encode("utf-8")

    chunks = [_PREAMBLE.pack(MAGIC, checkpoint.version, len(header_bytes)), header_bytes]
    chunks.extend(np.ascontiguousarray(values, dtype="<f8").tobytes() for _, values in parameter_blocks + moment_blocks)
    return b"".join(chunks)


def _read_block(data: memoryview, entry: dict[str, Any], source: str) -> FloatArray:
    shape = tuple(int(n) for n in entry["shape"])
    count = int(np.prod(shape, dtype=np.int64))
    start = int(entry["offset"])
    if start < 0 or start + count * 8 > len(data):
        raise CheckpointFormatError(f"{source}: block '{entry['name']}' runs past the end of the file")
    return np.frombuffer(data, dtype="<f8", count=count, offset=start).reshape(shape).astype(np.float64)


def decode_checkpoint(payload: bytes, source: str = "<bytes>") -> Checkpoint:
    if len(payload) < _PREAMBLE.size:
        raise CheckpointFormatError(f"{source}: truncated preamble")
    magic, version, header_length = _PREAMBLE.unpack_from(payload)
    if magic != MAGIC:
        raise CheckpointFormatError(f"{source}: bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise CheckpointFormatError(f"{source}: unsupported checkpoint version {version}, expected {VERSION}")

    header_end = _PREAMBLE.size + header_length
    if header_end > len(payload):
        raise CheckpointFormatError(f"{source}: truncated header")
    try:
        header = json.loads(payload[_PREAMBLE.size : header_end].decode("utf-8"))
        data = memoryview(payload)[header_end:]

        parameters = {entry["name"]: _read_block(data, entry, source) for entry in header["parameters"]}
        optimizer: dict[str, dict[str, Any]] = {name: {"t": int(t)} for name, t in header["optimizer"]["steps"].items()}
        for entry in header["optimizer"]["moments"]:
            name, kind = entry["name"].rsplit("/", 1)
            optimizer[name][kind] = _read_block(data, entry, source)

        return Checkpoint(
            model=ModelSettings.from_json_like(header["model"]),
            class_names=list(header["class_names"]),
            parameters=parameters,
            epoch=int(header["epoch"]),
            best_val_loss=float(header["best_val_loss"]),
            head_dropout=float(header["head_dropout"]),
            flow=FlowSolverSettings.from_json_like(header["flow"]),
            normalization=NormalizationSpec.from_json_like(header["normalization"]),
            optimizer=optimizer,
            version=version,
        )
    except (KeyError, ValueError, TypeError, SettingsError) as e:
        if isinstance(e, CheckpointFormatError):
            raise
        raise CheckpointFormatError(f"{source}: malformed header ({e})") from None


def save_checkpoint(checkpoint: Checkpoint, path: PathLike) -> None:
    with open(path, "wb") as f:
        f.write(encode_checkpoint(checkpoint))


def load_checkpoint(path: PathLike) -> Checkpoint:
    with open(path, "rb") as f:
        return decode_checkpoint(f.read(), str(path))


def restore_model(checkpoint: Checkpoint) -> TwoStreamModel:
    """Rebuild the network a checkpoint was taken from, in eval mode."""
    model = TwoStreamModel(checkpoint.model, checkpoint.head_dropout, create_generator(0))
    model.load_state_dict(checkpoint.parameters)
    model.eval()
    return model
