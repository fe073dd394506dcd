import math

from autodiff import ops
from autodiff.errors import DimensionError
from autodiff.tensor import Tensor


def attention_weights(q: Tensor, k: Tensor) -> Tensor:
    """softmax(QKᵀ/√d_k) over the key axis, one row per query."""
    if q.ndim != 2 or k.ndim != 2 or q.shape[1] != k.shape[1]:
        raise DimensionError(f"attention: queries {q.shape} and keys {k.shape} must share their last extent")
    scores = ops.scale(ops.matmul(q, ops.transpose(k)), 1.0 / math.sqrt(q.shape[1]))
    return ops.softmax(scores, axis=-1)


def scaled_dot_product_attention(q: Tensor, k: Tensor, v: Tensor) -> Tensor:
    if v.ndim != 2 or k.shape[0] != v.shape[0]:
        raise DimensionError(f"attention: keys {k.shape} and values {v.shape} must share their first extent")
    return ops.matmul(attention_weights(q, k), v)
