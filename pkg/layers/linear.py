from __future__ import annotations

import math

import numpy as np

from autodiff import ops
from autodiff.module import Module
from autodiff.tensor import Tensor


class Linear(Module):
    def __init__(self, in_features: int, out_features: int, rng: np.random.Generator, bias: bool = True) -> None:
        super().__init__()
        self.in_features = in_features
        self.out_features = out_features

        bound = 1.0 / math.sqrt(in_features)
        self.weight = self.add_parameter("weight", rng.uniform(-bound, bound, size=(in_features, out_features)))
        self.bias = self.add_parameter("bias", rng.uniform(-bound, bound, size=out_features)) if bias else None

    def forward(self, x: Tensor) -> Tensor:
        return ops.linear(x, self.weight, self.bias)

    def zero_(self) -> None:
        self.weight.data.fill(0.0)
        if self.bias is not None:
            self.bias.data.fill(0.0)
