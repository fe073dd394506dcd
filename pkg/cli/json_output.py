import json
import sys
from typing import Any, TextIO


def print_json(payload: Any, stream: TextIO | None = None) -> None:
    """Machine-readable result on stdout; logs stay on stderr."""
    out = stream or sys.stdout
    out.write(json.dumps(payload, sort_keys=True, allow_nan=False))
    out.write("\n")
    out.flush()
