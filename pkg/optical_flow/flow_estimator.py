from typing import Protocol

from autodiff.tensor import FloatArray
from optical_flow.flow_field import FlowField


class FlowEstimator(Protocol):
    def estimate(self, i1: FloatArray, i2: FloatArray) -> FlowField: ...
