from __future__ import annotations

import threading
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

from autodiff.errors import UsageError
from autodiff.tensor import FloatArray, Tensor

type BackwardRule = Callable[[FloatArray], Sequence[FloatArray | None]]


@dataclass(frozen=True)
class TapeRecord:
    op: str
    inputs: tuple[Tensor, ...]
    output: Tensor
    backward: BackwardRule


class GradTape:
    """
    Ordered record of executed ops for reverse-mode differentiation.

    Entering the tape makes it the recording target for ops run on this thread;
    tapes nest, the innermost wins. Ops only record when at least one input
    requires a gradient.
    """

    _local = threading.local()

    def __init__(self) -> None:
        self._records: list[TapeRecord] = []

    def __enter__(self) -> GradTape:
        self._stack().append(self)
        return self

    def __exit__(self, *exc_info: object) -> None:
        stack = self._stack()
        if not stack or stack[-1] is not self:
            raise UsageError("GradTape exited out of order")
        stack.pop()

    def __len__(self) -> int:
        return len(self._records)

    @property
    def records(self) -> tuple[TapeRecord, ...]:
        return tuple(self._records)

    @classmethod
    def current(cls) -> GradTape | None:
        stack = cls._stack()
        return stack[-1] if stack else None

    @classmethod
    @contextmanager
    def suspended(cls) -> Iterator[None]:
        """Run ops without recording, e.g. finite-difference evaluations."""
        stack = cls._stack()
        stack.append(None)
        try:
            yield
        finally:
            stack.pop()

    @classmethod
    def _stack(cls) -> list[GradTape | None]:
        stack = getattr(cls._local, "stack", None)
        if stack is None:
            stack = []
            cls._local.stack = stack
        return stack

    def record(self, op: str, inputs: tuple[Tensor, ...], output: Tensor, backward: BackwardRule) -> None:
        self._records.append(TapeRecord(op, inputs, output, backward))

    def clear(self) -> None:
        self._records.clear()

    def backward(self, loss: Tensor) -> None:
        """
        Propagate dloss/dtensor to every requires_grad tensor reachable from loss.

        Leaf gradients accumulate (callers zero them); intermediate tensors receive
        the gradient of this pass.
        """
        if loss.data.size != 1:
            raise UsageError(f"backward needs a scalar loss, got shape {loss.shape}")

        produced = {id(record.output) for record in self._records}
        if id(loss) not in produced:
            raise UsageError("loss was not produced through this tape")

        cotangents: dict[int, FloatArray] = {id(loss): np.ones_like(loss.data)}
        leaves: dict[int, Tensor] = {}

        for record in reversed(self._records):
            upstream = cotangents.pop(id(record.output), None)
            if upstream is None:
                continue

            record.output.grad = upstream
            for tensor, grad in zip(record.inputs, record.backward(upstream)):
                if grad is None or not tensor.requires_grad:
                    continue
                key = id(tensor)
                if key not in produced:
                    leaves[key] = tensor
                existing = cotangents.get(key)
                cotangents[key] = grad if existing is None else existing + grad

        for key, tensor in leaves.items():
            leaf_grad = tensor.grad
            assert leaf_grad is not None
            leaf_grad += cotangents[key]
