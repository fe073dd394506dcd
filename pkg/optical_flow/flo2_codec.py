import struct

import numpy as np

from gamevolt.io.typing import PathLike
from optical_flow.errors import FlowFormatError
from optical_flow.flow_field import FlowField

MAGIC = b"FLO2"
_HEADER = struct.Struct("<4sII")  # magic, H, W


def encode_flo2(flow: FlowField) -> bytes:
    body = np.ascontiguousarray(flow.vectors, dtype="<f4").tobytes()
    return _HEADER.pack(MAGIC, flow.height, flow.width) + body


def decode_flo2(payload: bytes, source: str = "<bytes>") -> FlowField:
    if len(payload) < _HEADER.size:
        raise FlowFormatError(f"{source}: truncated header ({len(payload)} bytes)")

    magic, height, width = _HEADER.unpack_from(payload)
    if magic != MAGIC:
        raise FlowFormatError(f"{source}: bad magic {magic!r}, expected {MAGIC!r}")

    expected = _HEADER.size + height * width * 2 * 4
    if len(payload) != expected:
        raise FlowFormatError(f"{source}: expected {expected} bytes for {height}x{width}, got {len(payload)}")

    values = np.frombuffer(payload, dtype="<f4", offset=_HEADER.size).reshape(height, width, 2)
    return FlowField(values.astype(np.float64))


def write_flo2(path: PathLike, flow: FlowField) -> None:
    with open(path, "wb") as f:
        f.write(encode_flo2(flow))


def read_flo2(path: PathLike) -> FlowField:
    with open(path, "rb") as f:
        return decode_flo2(f.read(), str(path))
