from __future__ import annotations

from collections.abc import Iterator, Mapping

import numpy as np

from autodiff.errors import UsageError
from autodiff.tensor import FloatArray, Tensor


class Module:
    """
    Parameter container. Parameters and child modules are registered explicitly
    and enumerated in registration order under dotted names.
    """

    def __init__(self) -> None:
        self._parameters: dict[str, Tensor] = {}
        self._children: dict[str, Module] = {}
        self.training = True

    def add_parameter(self, name: str, data: FloatArray) -> Tensor:
        if name in self._parameters or name in self._children:
            raise UsageError(f"'{name}' is already registered on {type(self).__name__}")
        tensor = Tensor(data, requires_grad=True, name=name)
        self._parameters[name] = tensor
        return tensor

    def add_child[M: Module](self, name: str, module: M) -> M:
        if name in self._parameters or name in self._children:
            raise UsageError(f"'{name}' is already registered on {type(self).__name__}")
        self._children[name] = module
        return module

    def named_parameters(self, prefix: str = "") -> Iterator[tuple[str, Tensor]]:
        for name, tensor in self._parameters.items():
            yield f"{prefix}{name}", tensor
        for name, child in self._children.items():
            yield from child.named_parameters(f"{prefix}{name}.")

    def parameters(self) -> list[Tensor]:
        return [t for _, t in self.named_parameters()]

    def parameter_count(self) -> int:
        return sum(t.size for t in self.parameters())

    def train(self, mode: bool = True) -> Module:
        self.training = mode
        for child in self._children.values():
            child.train(mode)
        return self

    def eval(self) -> Module:
        return self.train(False)

    def zero_grad(self) -> None:
        for tensor in self.parameters():
            tensor.zero_grad()

    def state_dict(self) -> dict[str, FloatArray]:
        return {name: tensor.data.copy() for name, tensor in self.named_parameters()}

    def load_state_dict(self, state: Mapping[str, FloatArray], strict: bool = True) -> None:
        own = dict(self.named_parameters())
        if strict:
            missing = sorted(set(own) - set(state))
            unexpected = sorted(set(state) - set(own))
            if missing or unexpected:
                raise UsageError(f"state mismatch: missing {missing}, unexpected {unexpected}")

        for name, values in state.items():
            tensor = own.get(name)
            if tensor is None:
                continue
            array = np.asarray(values, dtype=np.float64)
            if array.shape != tensor.shape:
                raise UsageError(f"parameter '{name}' has shape {tensor.shape}, state holds {array.shape}")
            np.copyto(tensor.data, array)
