import numpy as np
import pytest

from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from optical_flow.errors import FlowInputError
from optical_flow.flow_field import FlowField
from optical_flow.flow_sequence import flow_sequence
from optical_flow.horn_schunck_estimator import HornSchunckEstimator


class _CountingEstimator:
    def __init__(self) -> None:
        self.calls = 0

    def estimate(self, i1: np.ndarray, i2: np.ndarray) -> FlowField:
        self.calls += 1
        return FlowField.from_components(np.full(i1.shape[:2], float(self.calls)), np.zeros(i1.shape[:2]))


def _moving_square(frames: int, size: int = 24) -> np.ndarray:
    clip = np.zeros((frames, size, size, 3))
    for t in range(frames):
        clip[t, 8:14, 4 + 2 * t : 10 + 2 * t] = 1.0
    return clip


def test_static_clip_gives_zero_flows():
    clip = np.repeat(np.random.default_rng(0).random((1, 16, 16, 3)), 4, axis=0)
    flows = flow_sequence(clip, HornSchunckEstimator(FlowSolverSettings(pyramid_levels=1)))
    assert len(flows) == 4
    assert all(np.max(np.abs(f.vectors)) < 1e-9 for f in flows)


def test_two_frames_duplicate_the_single_flow():
    flows = flow_sequence(np.zeros((2, 4, 4, 3)), _CountingEstimator())
    assert len(flows) == 2
    np.testing.assert_array_equal(flows[0].vectors, flows[1].vectors)


def test_last_flow_repeats_the_previous_one_bit_exact():
    flows = flow_sequence(_moving_square(4), HornSchunckEstimator(FlowSolverSettings(pyramid_levels=2, iterations=50)))

    assert len(flows) == 4
    np.testing.assert_array_equal(flows[3].vectors, flows[2].vectors)
    assert np.any(flows[0].vectors)


def test_thread_pool_keeps_pair_order():
    clip = np.stack([np.full((4, 4, 3), t / 10.0) for t in range(5)])

    class _DeltaEstimator:
        def estimate(self, i1: np.ndarray, i2: np.ndarray) -> FlowField:
            return FlowField.from_components(np.full((4, 4), i1[0, 0, 0]), np.zeros((4, 4)))

    flows = flow_sequence(clip, _DeltaEstimator(), workers=3)
    assert [f.horizontal[0, 0] for f in flows] == pytest.approx([0.0, 0.1, 0.2, 0.3, 0.3])


def test_single_frame_is_rejected():
    with pytest.raises(FlowInputError):
        flow_sequence(np.zeros((1, 4, 4, 3)), _CountingEstimator())
