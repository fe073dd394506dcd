from autodiff.adam_optimizer import AdamOptimizer, AdamState, adam_step
from autodiff.errors import DimensionError, ParameterError, UsageError
from autodiff.grad_tape import GradTape
from autodiff.module import Module
from autodiff.rng import create_generator, derive_generator, spawn_generator
from autodiff.tensor import Tensor

__all__ = [
    "AdamOptimizer",
    "AdamState",
    "DimensionError",
    "GradTape",
    "Module",
    "ParameterError",
    "Tensor",
    "UsageError",
    "adam_step",
    "create_generator",
    "derive_generator",
    "spawn_generator",
]
