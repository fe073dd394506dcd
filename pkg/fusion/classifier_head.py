from __future__ import annotations

import numpy as np

from autodiff import ops
from autodiff.module import Module
from autodiff.rng import derive_generator
from autodiff.tensor import Tensor
from layers.dropout import Dropout
from layers.layer_norm import LayerNorm
from layers.linear import Linear


class ClassifierHead(Module):
    """class-token row → LN → dropout → linear(D→K)"""

    def __init__(self, dim: int, num_classes: int, dropout: float, rng: np.random.Generator) -> None:
        super().__init__()
        self.dim = dim
        self.norm = self.add_child("norm", LayerNorm(dim))
        self.dropout = self.add_child("dropout", Dropout(dropout, derive_generator(rng)))
        self.classifier = self.add_child("classifier", Linear(dim, num_classes, rng))

    def forward(self, encoded: Tensor) -> Tensor:
        class_row = ops.reshape(ops.select_row(encoded, 0), (1, self.dim))
        logits = self.classifier.forward(self.dropout.forward(self.norm.forward(class_row)))
        return ops.reshape(logits, (logits.shape[1],))


def classify(encoded: Tensor, head: ClassifierHead, training: bool) -> Tensor:
    head.train(training)
    return head.forward(encoded)
