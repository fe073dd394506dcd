from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from autodiff.tensor import FloatArray
from optical_flow.errors import FlowInputError
from optical_flow.flow_estimator import FlowEstimator
from optical_flow.flow_field import FlowField


def flow_sequence(frames: FloatArray, estimator: FlowEstimator, workers: int = 1) -> list[FlowField]:
    """
    T flow fields for a T-frame clip: flow t pairs frames (t, t+1), and the last field
    repeats flow T-2 so both streams have the same length.
    """
    count = frames.shape[0]
    if count < 2:
        raise FlowInputError(f"flow needs at least 2 frames, got {count}")

    pairs = [(frames[t], frames[t + 1]) for t in range(count - 1)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flows = list(pool.map(lambda pair: estimator.estimate(*pair), pairs))
    else:
        flows = [estimator.estimate(i1, i2) for i1, i2 in pairs]

    flows.append(flows[-1])
    return flows
