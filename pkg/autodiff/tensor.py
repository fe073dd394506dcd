from __future__ import annotations

from collections.abc import Sequence
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

type FloatArray = NDArray[np.float64]


class Tensor:
    """
    Dense float64 array with optional participation in a GradTape.

    `grad` exists iff requires_grad; its buffer is allocated on first access.
    """

    __slots__ = ("data", "requires_grad", "name", "_grad")
    __array_priority__ = 1000

    def __init__(self, data: ArrayLike, requires_grad: bool = False, name: str | None = None) -> None:
        array = np.asarray(data, dtype=np.float64)
        if not array.flags.c_contiguous:
            array = array.copy(order="C")
        self.data: FloatArray = array
        self.requires_grad = requires_grad
        self.name = name
        self._grad: FloatArray | None = None

    @classmethod
    def zeros(cls, shape: Sequence[int], requires_grad: bool = False, name: str | None = None) -> Tensor:
        return cls(np.zeros(tuple(shape)), requires_grad=requires_grad, name=name)

    @property
    def grad(self) -> FloatArray | None:
        if not self.requires_grad:
            return None
        if self._grad is None:
            self._grad = np.zeros_like(self.data)
        return self._grad

    @grad.setter
    def grad(self, value: FloatArray | None) -> None:
        self._grad = value

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return self.data.size

    def zero_grad(self) -> None:
        self._grad = None

    def item(self) -> float:
        if self.data.size != 1:
            raise ValueError(f"item() needs a single-element tensor, got shape {self.shape}")
        return float(self.data.reshape(-1)[0])

    def numpy(self) -> FloatArray:
        return self.data.copy()

    def detach(self) -> Tensor:
        return Tensor(self.data.copy(), name=self.name)

    def __repr__(self) -> str:
        label = f" '{self.name}'" if self.name else ""
        return f"Tensor{label}(shape={self.shape}, requires_grad={self.requires_grad})"

    # Operators route through autodiff.ops so they are taped like the named functions.

    def __add__(self, other: Any) -> Tensor:
        from autodiff import ops

        return ops.add(self, other)

    def __radd__(self, other: Any) -> Tensor:
        from autodiff import ops

        return ops.add(other, self)

    def __sub__(self, other: Any) -> Tensor:
        from autodiff import ops

        return ops.sub(self, other)

    def __rsub__(self, other: Any) -> Tensor:
        from autodiff import ops

        return ops.sub(other, self)

    def __mul__(self, other: Any) -> Tensor:
        from autodiff import ops

        return ops.mul(self, other)

    def __rmul__(self, other: Any) -> Tensor:
        from autodiff import ops

        return ops.mul(other, self)

    def __neg__(self) -> Tensor:
        from autodiff import ops

        return ops.neg(self)

    def __matmul__(self, other: Tensor) -> Tensor:
        from autodiff import ops

        return ops.matmul(self, other)

    @property
    def T(self) -> Tensor:
        from autodiff import ops

        return ops.transpose(self)
