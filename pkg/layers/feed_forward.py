import numpy as np

from autodiff import ops
from autodiff.module import Module
from autodiff.rng import derive_generator
from autodiff.tensor import Tensor
from layers.dropout import Dropout
from layers.linear import Linear


class FeedForward(Module):
    """linear(D→F) → GELU → dropout → linear(F→D)"""

    def __init__(self, dim: int, hidden_dim: int, dropout: float, rng: np.random.Generator) -> None:
        super().__init__()
        self.expand = self.add_child("expand", Linear(dim, hidden_dim, rng))
        self.contract = self.add_child("contract", Linear(hidden_dim, dim, rng))
        self.dropout = self.add_child("dropout", Dropout(dropout, derive_generator(rng)))

    def forward(self, x: Tensor) -> Tensor:
        return self.contract.forward(self.dropout.forward(ops.gelu(self.expand.forward(x))))
