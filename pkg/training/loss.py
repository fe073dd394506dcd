from collections.abc import Sequence

import numpy as np

from autodiff import ops
from autodiff.errors import DimensionError
from autodiff.tensor import Tensor


def one_hot(labels: Sequence[int], classes: int) -> np.ndarray:
    encoded = np.zeros((len(labels), classes))
    encoded[np.arange(len(labels)), np.asarray(labels, dtype=np.int64)] = 1.0
    return encoded


def cross_entropy(logits: Tensor, labels: Sequence[int]) -> Tensor:
    """Mean over the batch of −log softmax(logits)[label], via log-sum-exp."""
    if logits.ndim != 2 or logits.shape[0] != len(labels):
        raise DimensionError(f"cross_entropy: logits {logits.shape} do not match {len(labels)} labels")
    classes = logits.shape[1]
    for label in labels:
        if not 0 <= label < classes:
            raise ValueError(f"label {label} is out of range for {classes} classes")

    picked = ops.mul(ops.log_softmax(logits, axis=1), one_hot(labels, classes))
    return ops.scale(ops.sum(picked), -1.0 / len(labels))
