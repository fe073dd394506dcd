import numpy as np

from autodiff import ops
from autodiff.errors import ParameterError
from autodiff.module import Module
from autodiff.tensor import Tensor


class Dropout(Module):
    """Owns its generator so the mask sequence depends only on the seed and call order."""

    def __init__(self, p: float, rng: np.random.Generator) -> None:
        super().__init__()
        if not 0.0 <= p < 1.0:
            raise ParameterError(f"dropout probability must be in [0, 1), got {p}")
        self.p = p
        self._rng = rng

    def forward(self, x: Tensor) -> Tensor:
        return ops.dropout(x, self.p, self._rng, self.training)
