from __future__ import annotations

import numpy as np

from autodiff.rng import spawn_generator


class BatchSampler:
    """
    Index batches per epoch. Shuffled order depends only on (seed, epoch); the final
    partial batch is dropped when drop_last is set and at least one full batch exists.
    """

    def __init__(self, count: int, batch_size: int, *, shuffle: bool, drop_last: bool, seed: int = 0) -> None:
        self._count = count
        self._batch_size = batch_size
        self._shuffle = shuffle
        self._drop_last = drop_last
        self._seed = seed

    def batches(self, epoch: int) -> list[list[int]]:
        order = spawn_generator(self._seed, epoch).permutation(self._count) if self._shuffle else np.arange(self._count)
        stop = self._count - self._count % self._batch_size if self._drop_last and self._count >= self._batch_size else self._count
        return [[int(i) for i in order[start : min(start + self._batch_size, stop)]] for start in range(0, stop, self._batch_size)]
