from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from autodiff.errors import ParameterError, UsageError
from autodiff.tensor import FloatArray, Tensor


@dataclass
class AdamState:
    m: FloatArray
    v: FloatArray
    t: int = 0
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    learning_rate: float = 2e-4

    @classmethod
    def for_parameter(
        cls,
        param: Tensor,
        learning_rate: float = 2e-4,
        beta1: float = 0.9,
        beta2: float = 0.999,
        eps: float = 1e-8,
    ) -> AdamState:
        return cls(
            m=np.zeros_like(param.data),
            v=np.zeros_like(param.data),
            beta1=beta1,
            beta2=beta2,
            eps=eps,
            learning_rate=learning_rate,
        )


def adam_step(param: Tensor, state: AdamState) -> None:
    """One Adam update with bias correction, in place on param.data and state."""
    grad = param.grad if param.requires_grad else None
    if grad is None:
        raise UsageError(f"adam_step needs a populated gradient for {param!r}")

    state.t += 1
    state.m *= state.beta1
    state.m += (1.0 - state.beta1) * grad
    state.v *= state.beta2
    state.v += (1.0 - state.beta2) * grad * grad

    m_hat = state.m / (1.0 - state.beta1**state.t)
    v_hat = state.v / (1.0 - state.beta2**state.t)
    param.data -= state.learning_rate * m_hat / (np.sqrt(v_hat) + state.eps)


@dataclass
class AdamOptimizer:
    parameters: dict[str, Tensor]
    learning_rate: float = 2e-4
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    states: dict[str, AdamState] = field(init=False)

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ParameterError(f"learning rate must be positive, got {self.learning_rate}")
        if not (0.0 <= self.beta1 < 1.0 and 0.0 <= self.beta2 < 1.0):
            raise ParameterError(f"betas must be in [0, 1), got ({self.beta1}, {self.beta2})")
        self.states = {
            name: AdamState.for_parameter(p, self.learning_rate, self.beta1, self.beta2, self.eps) for name, p in self.parameters.items()
        }

    @classmethod
    def from_named(cls, named: Iterable[tuple[str, Tensor]], **kwargs: float) -> AdamOptimizer:
        return cls(dict(named), **kwargs)

    @property
    def step_count(self) -> int:
        return max((s.t for s in self.states.values()), default=0)

    def step(self) -> None:
        for name, param in self.parameters.items():
            adam_step(param, self.states[name])

    def zero_grad(self) -> None:
        for param in self.parameters.values():
            param.zero_grad()

    def state_dict(self) -> dict[str, dict[str, FloatArray | int]]:
        return {name: {"m": s.m.copy(), "v": s.v.copy(), "t": s.t} for name, s in self.states.items()}

    def load_state_dict(self, state: dict[str, dict[str, FloatArray | int]]) -> None:
        missing = sorted(set(self.states) - set(state))
        if missing:
            raise UsageError(f"optimizer state is missing parameters: {missing}")
        for name, s in self.states.items():
            entry = state[name]
            m = np.asarray(entry["m"], dtype=np.float64)
            v = np.asarray(entry["v"], dtype=np.float64)
            if m.shape != s.m.shape or v.shape != s.v.shape:
                raise UsageError(f"optimizer moments for '{name}' have shape {m.shape}, expected {s.m.shape}")
            np.copyto(s.m, m)
            np.copyto(s.v, v)
            s.t = int(entry["t"])
