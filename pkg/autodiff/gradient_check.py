from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass

import numpy as np

from autodiff.errors import UsageError
from autodiff.grad_tape import GradTape
from autodiff.tensor import FloatArray, Tensor


@dataclass(frozen=True)
class GradientReport:
    name: str
    relative_error: float
    checked_entries: int


def _relative_error(analytic: FloatArray, numeric: FloatArray) -> float:
    scale = max(float(np.linalg.norm(analytic)), float(np.linalg.norm(numeric)), 1e-8)
    return float(np.linalg.norm(analytic - numeric)) / scale


def check_gradients(
    loss_fn: Callable[[], Tensor],
    tensors: Mapping[str, Tensor],
    step: float = 1e-5,
    max_entries: int | None = None,
    rng: np.random.Generator | None = None,
) -> dict[str, GradientReport]:
    """
    Compare taped gradients of loss_fn() against central finite differences.

    With max_entries set, a random subset of entries per tensor is checked (rng picks it);
    the relative error is then measured over that subset only.
    """
    for tensor in tensors.values():
        tensor.requires_grad = True
        tensor.zero_grad()

    with GradTape() as tape:
        loss = loss_fn()
    tape.backward(loss)
    analytic = {name: np.array(t.grad, copy=True) for name, t in tensors.items()}

    reports: dict[str, GradientReport] = {}
    with GradTape.suspended():
        for name, tensor in tensors.items():
            flat = tensor.data.reshape(-1)
            if max_entries is not None and max_entries < flat.size:
                if rng is None:
                    raise UsageError("sampling gradient entries needs a random generator")
                indices = np.sort(rng.choice(flat.size, size=max_entries, replace=False))
            else:
                indices = np.arange(flat.size)

            numeric = np.empty(indices.size)
            for j, index in enumerate(indices):
                original = flat[index]
                flat[index] = original + step
                plus = loss_fn().item()
                flat[index] = original - step
                minus = loss_fn().item()
                flat[index] = original
                numeric[j] = (plus - minus) / (2.0 * step)

            reports[name] = GradientReport(name, _relative_error(analytic[name].reshape(-1)[indices], numeric), int(indices.size))

    return reports


def max_relative_error(reports: Mapping[str, GradientReport]) -> float:
    return max((r.relative_error for r in reports.values()), default=0.0)
