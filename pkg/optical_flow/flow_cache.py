from __future__ import annotations

import hashlib
import re
import threading
from collections.abc import Callable
from pathlib import Path

import numpy as np

from autodiff.tensor import FloatArray
from gamevolt.io.utils import ensure_dir, json_digest
from gamevolt.logging import Logger
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings

_UNSAFE = re.compile(r"[^A-Za-z0-9._-]")


class FlowCache:
    """
    Flow-RGB frame stacks keyed by (clip id, pixel digest) under a solver config digest,
    held in memory and, when a directory is given, mirrored to <dir>/<config digest>/<key>.npy.
    """

    def __init__(self, logger: Logger, settings: FlowSolverSettings, cache_dir: str | None = None) -> None:
        self._logger = logger
        self.config_digest = json_digest(settings.to_json_like())
        self._dir = Path(cache_dir) / self.config_digest[:16] if cache_dir else None
        self._memory: dict[str, FloatArray] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def frames_digest(frames: FloatArray) -> str:
        data = np.ascontiguousarray(frames)
        sha = hashlib.sha256(f"{data.dtype.str}{data.shape}".encode("utf-8"))
        sha.update(data.tobytes())
        return sha.hexdigest()

    @classmethod
    def key_for(cls, clip_id: str | None, frames: FloatArray) -> str:
        """Pixel digest, prefixed by the clip id when there is one; ids alone repeat across datasets."""
        digest = cls.frames_digest(frames)
        if clip_id:
            return f"{_UNSAFE.sub('_', clip_id)}-{digest[:16]}"
        return digest

    def get_or_compute(self, key: str, compute: Callable[[], FloatArray]) -> FloatArray:
        with self._lock:
            cached = self._memory.get(key)
            if cached is not None:
                self.hits += 1
                return cached

        path = self._dir / f"{key}.npy" if self._dir is not None else None
        from_disk = False
        if path is not None and path.is_file():
            value = np.load(path)
            from_disk = True
        else:
            value = compute()
            if path is not None:
                ensure_dir(path.parent)
                np.save(path, value)
                self._logger.verbose(f"Cached flow for '{key}' at '{path}'.")

        with self._lock:
            if from_disk:
                self.hits += 1
            else:
                self.misses += 1
            self._memory[key] = value
        return value
