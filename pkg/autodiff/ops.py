"""
Differentiable tensor operations.

Every op computes its forward value with numpy and, when a GradTape is active and an
input requires a gradient, records a backward rule mapping the output cotangent to
one cotangent per input. Backward rules never mutate the incoming cotangent.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy.special import erf

from autodiff.errors import DimensionError, ParameterError, UsageError
from autodiff.grad_tape import BackwardRule, GradTape
from autodiff.tensor import FloatArray, Tensor

_SQRT_2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

type Operand = Tensor | float | int | FloatArray


def as_tensor(value: Operand) -> Tensor:
    return value if isinstance(value, Tensor) else Tensor(value)


def _result(op: str, inputs: tuple[Tensor, ...], data: FloatArray, backward: BackwardRule) -> Tensor:
    tape = GradTape.current()
    track = tape is not None and any(t.requires_grad for t in inputs)
    out = Tensor(data, requires_grad=track)
    if track:
        assert tape is not None
        tape.record(op, inputs, out, backward)
    return out


def _unbroadcast(grad: FloatArray, shape: tuple[int, ...]) -> FloatArray:
    if grad.shape == shape:
        return grad
    extra = grad.ndim - len(shape)
    if extra > 0:
        grad = grad.sum(axis=tuple(range(extra)))
    axes = tuple(i for i, n in enumerate(shape) if n == 1 and grad.shape[i] != 1)
    if axes:
        grad = grad.sum(axis=axes, keepdims=True)
    return grad


def _broadcast_data(op: str, a: Tensor, b: Tensor) -> None:
    try:
        np.broadcast_shapes(a.shape, b.shape)
    except ValueError:
        raise DimensionError(f"{op}: cannot broadcast shapes {a.shape} and {b.shape}") from None


def _normalize_axis(axis: int, ndim: int, op: str) -> int:
    if not -ndim <= axis < ndim:
        raise DimensionError(f"{op}: axis {axis} out of range for rank {ndim}")
    return axis % ndim


# ---------------------------------------------------------------------------
# Elementwise
# ---------------------------------------------------------------------------


def add(a: Operand, b: Operand) -> Tensor:
    ta, tb = as_tensor(a), as_tensor(b)
    _broadcast_data("add", ta, tb)
    return _result("add", (ta, tb), ta.data + tb.data, lambda g: (_unbroadcast(g, ta.shape), _unbroadcast(g, tb.shape)))


def sub(a: Operand, b: Operand) -> Tensor:
    ta, tb = as_tensor(a), as_tensor(b)
    _broadcast_data("sub", ta, tb)
    return _result("sub", (ta, tb), ta.data - tb.data, lambda g: (_unbroadcast(g, ta.shape), _unbroadcast(-g, tb.shape)))


def mul(a: Operand, b: Operand) -> Tensor:
    ta, tb = as_tensor(a), as_tensor(b)
    _broadcast_data("mul", ta, tb)
    return _result(
        "mul",
        (ta, tb),
        ta.data * tb.data,
        lambda g: (_unbroadcast(g * tb.data, ta.shape), _unbroadcast(g * ta.data, tb.shape)),
    )


def neg(x: Tensor) -> Tensor:
    return _result("neg", (x,), -x.data, lambda g: (-g,))


def scale(x: Tensor, factor: float) -> Tensor:
    return _result("scale", (x,), x.data * factor, lambda g: (g * factor,))


def gelu(x: Tensor) -> Tensor:
    """Exact GELU, x·Φ(x)."""
    cdf = 0.5 * (1.0 + erf(x.data / _SQRT_2))
    pdf = _INV_SQRT_2PI * np.exp(-0.5 * x.data * x.data)
    return _result("gelu", (x,), x.data * cdf, lambda g: (g * (cdf + x.data * pdf),))


def dropout(x: Tensor, p: float, rng: np.random.Generator | None, training: bool) -> Tensor:
    """Inverted dropout: survivors are scaled by 1/(1-p) so eval mode is the identity."""
    if not 0.0 <= p < 1.0:
        raise ParameterError(f"dropout probability must be in [0, 1), got {p}")
    if not training or p == 0.0:
        return x
    if rng is None:
        raise UsageError("dropout in training mode needs a random generator")

    multiplier = (rng.random(x.shape) >= p) * (1.0 / (1.0 - p))
    return _result("dropout", (x,), x.data * multiplier, lambda g: (g * multiplier,))


# ---------------------------------------------------------------------------
# Linear algebra
# ---------------------------------------------------------------------------


def matmul(a: Tensor, b: Tensor) -> Tensor:
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionError(f"matmul: cannot multiply {a.shape} by {b.shape}")
    return _result("matmul", (a, b), a.data @ b.data, lambda g: (g @ b.data.T, a.data.T @ g))


def linear(x: Tensor, weight: Tensor, bias: Tensor | None = None) -> Tensor:
    """y = xW (+ b) for x [N×in], W [in×out], b [out]."""
    if x.ndim != 2 or weight.ndim != 2 or x.shape[1] != weight.shape[0]:
        raise DimensionError(f"linear: input {x.shape} does not match weight {weight.shape}")

    if bias is None:
        return _result("linear", (x, weight), x.data @ weight.data, lambda g: (g @ weight.data.T, x.data.T @ g))

    if bias.shape != (weight.shape[1],):
        raise DimensionError(f"linear: bias {bias.shape} does not match weight {weight.shape}")
    return _result(
        "linear",
        (x, weight, bias),
        x.data @ weight.data + bias.data,
        lambda g: (g @ weight.data.T, x.data.T @ g, g.sum(axis=0)),
    )


def transpose(x: Tensor, axes: Sequence[int] | None = None) -> Tensor:
    order = tuple(reversed(range(x.ndim))) if axes is None else tuple(axes)
    if sorted(order) != list(range(x.ndim)):
        raise DimensionError(f"transpose: {order} is not a permutation of the axes of {x.shape}")
    inverse = tuple(int(i) for i in np.argsort(order))
    return _result("transpose", (x,), np.transpose(x.data, order), lambda g: (np.transpose(g, inverse),))


def reshape(x: Tensor, shape: Sequence[int]) -> Tensor:
    try:
        data = x.data.reshape(tuple(shape))
    except ValueError:
        raise DimensionError(f"reshape: cannot reshape {x.shape} into {tuple(shape)}") from None
    return _result("reshape", (x,), data, lambda g: (g.reshape(x.shape),))


def concat(tensors: Sequence[Tensor], axis: int = 0) -> Tensor:
    if not tensors:
        raise UsageError("concat needs at least one tensor")
    inputs = tuple(tensors)
    ax = _normalize_axis(axis, inputs[0].ndim, "concat")
    try:
        data = np.concatenate([t.data for t in inputs], axis=ax)
    except ValueError:
        raise DimensionError(f"concat: incompatible shapes {[t.shape for t in inputs]} along axis {axis}") from None

    boundaries = np.cumsum([t.shape[ax] for t in inputs])[:-1]
    return _result("concat", inputs, data, lambda g: tuple(np.split(g, boundaries, axis=ax)))


def stack(tensors: Sequence[Tensor], axis: int = 0) -> Tensor:
    if not tensors:
        raise UsageError("stack needs at least one tensor")
    inputs = tuple(tensors)
    try:
        data = np.stack([t.data for t in inputs], axis=axis)
    except ValueError:
        raise DimensionError(f"stack: incompatible shapes {[t.shape for t in inputs]}") from None
    return _result("stack", inputs, data, lambda g: tuple(np.take(g, i, axis=axis) for i in range(len(inputs))))


def select_row(x: Tensor, index: int) -> Tensor:
    if x.ndim < 1 or not -x.shape[0] <= index < x.shape[0]:
        raise DimensionError(f"select_row: index {index} out of range for {x.shape}")

    def backward(g: FloatArray) -> tuple[FloatArray]:
        grad = np.zeros_like(x.data)
        grad[index] = g
        return (grad,)

    return _result("select_row", (x,), x.data[index].copy(), backward)


# ---------------------------------------------------------------------------
# Reductions
# ---------------------------------------------------------------------------


def sum(x: Tensor, axis: int | None = None, keepdims: bool = False) -> Tensor:  # noqa: A001
    if axis is not None:
        axis = _normalize_axis(axis, x.ndim, "sum")

    def backward(g: FloatArray) -> tuple[FloatArray]:
        if axis is not None and not keepdims:
            g = np.expand_dims(g, axis)
        return (np.broadcast_to(g, x.shape),)

    return _result("sum", (x,), np.sum(x.data, axis=axis, keepdims=keepdims), backward)


def mean(x: Tensor, axis: int | None = None, keepdims: bool = False) -> Tensor:
    if axis is not None:
        axis = _normalize_axis(axis, x.ndim, "mean")
    count = x.size if axis is None else x.shape[axis]

    def backward(g: FloatArray) -> tuple[FloatArray]:
        if axis is not None and not keepdims:
            g = np.expand_dims(g, axis)
        return (np.broadcast_to(g / count, x.shape),)

    return _result("mean", (x,), np.mean(x.data, axis=axis, keepdims=keepdims), backward)


def mean_pool_tokens(x: Tensor, stride: int) -> Tensor:
    """
    Strided mean-pooling over the token axis of an [L×D] matrix.

    Output row j averages rows [j·s, min((j+1)·s, L)); the trailing window may be short,
    giving ⌈L/s⌉ rows.
    """
    if stride < 1:
        raise ParameterError(f"pool stride must be >= 1, got {stride}")
    if x.ndim != 2:
        raise DimensionError(f"mean_pool_tokens: expected [L×D], got {x.shape}")
    if stride == 1:
        return x

    length, dim = x.shape
    full = length // stride
    rest = length - full * stride

    parts: list[FloatArray] = []
    if full:
        parts.append(x.data[: full * stride].reshape(full, stride, dim).mean(axis=1))
    if rest:
        parts.append(x.data[full * stride :].mean(axis=0, keepdims=True))
    data = np.concatenate(parts, axis=0)

    def backward(g: FloatArray) -> tuple[FloatArray]:
        grad = np.empty_like(x.data)
        if full:
            grad[: full * stride] = np.repeat(g[:full] / stride, stride, axis=0)
        if rest:
            grad[full * stride :] = g[full] / rest
        return (grad,)

    return _result("mean_pool_tokens", (x,), data, backward)


# ---------------------------------------------------------------------------
# Normalisation
# ---------------------------------------------------------------------------


def softmax(x: Tensor, axis: int = -1) -> Tensor:
    ax = _normalize_axis(axis, x.ndim, "softmax")
    shifted = x.data - np.max(x.data, axis=ax, keepdims=True)
    exps = np.exp(shifted)
    y = exps / np.sum(exps, axis=ax, keepdims=True)
    return _result("softmax", (x,), y, lambda g: (y * (g - np.sum(g * y, axis=ax, keepdims=True)),))


def log_softmax(x: Tensor, axis: int = -1) -> Tensor:
    ax = _normalize_axis(axis, x.ndim, "log_softmax")
    shifted = x.data - np.max(x.data, axis=ax, keepdims=True)
    y = shifted - np.log(np.sum(np.exp(shifted), axis=ax, keepdims=True))
    return _result("log_softmax", (x,), y, lambda g: (g - np.exp(y) * np.sum(g, axis=ax, keepdims=True),))


def layer_norm(x: Tensor, gain: Tensor, bias: Tensor, eps: float = 1e-5) -> Tensor:
    dim = x.shape[-1] if x.ndim else 0
    if gain.shape != (dim,) or bias.shape != (dim,):
        raise DimensionError(f"layer_norm: last extent of {x.shape} does not match gain {gain.shape} / bias {bias.shape}")

    centred = x.data - np.mean(x.data, axis=-1, keepdims=True)
    inv_std = 1.0 / np.sqrt(np.mean(centred * centred, axis=-1, keepdims=True) + eps)
    normed = centred * inv_std
    y = normed * gain.data + bias.data

    def backward(g: FloatArray) -> tuple[FloatArray, FloatArray, FloatArray]:
        d_normed = g * gain.data
        d_x = inv_std * (
            d_normed - np.mean(d_normed, axis=-1, keepdims=True) - normed * np.mean(d_normed * normed, axis=-1, keepdims=True)
        )
        d_gain = (g * normed).reshape(-1, dim).sum(axis=0)
        d_bias = g.reshape(-1, dim).sum(axis=0)
        return d_x, d_gain, d_bias

    return _result("layer_norm", (x, gain, bias), y, backward)


def backward(loss: Tensor, tape: GradTape) -> None:
    tape.backward(loss)
