import numpy as np
import pytest

from autodiff.errors import DimensionError
from optical_flow.flow_field import FlowField, endpoint_error
from optical_flow.warp import warp

_COLUMNS = np.tile(np.arange(8.0), (5, 1))


def _constant(horizontal: float, vertical: float, shape=(5, 8)) -> FlowField:
    return FlowField.from_components(np.full(shape, horizontal), np.full(shape, vertical))


def test_zero_flow_is_bit_exact_identity():
    image = np.random.default_rng(0).random((5, 8, 3))
    np.testing.assert_array_equal(warp(image, FlowField.zeros(5, 8)), image)


def test_unit_horizontal_flow_samples_the_right_neighbour():
    out = warp(_COLUMNS, _constant(1.0, 0.0))
    expected = np.tile(np.minimum(np.arange(8.0) + 1.0, 7.0), (5, 1))
    np.testing.assert_allclose(out, expected)


def test_half_pixel_flow_interpolates_between_neighbours():
    out = warp(_COLUMNS, _constant(0.5, 0.0))
    np.testing.assert_allclose(out[:, :-1], _COLUMNS[:, :-1] + 0.5)


def test_vertical_flow_moves_rows():
    rows = np.tile(np.arange(5.0)[:, None], (1, 8))
    out = warp(rows, _constant(0.0, -1.0))
    np.testing.assert_allclose(out[1:], rows[:-1])
    np.testing.assert_allclose(out[0], rows[0])


def test_colour_image_warps_every_channel():
    image = np.stack([_COLUMNS, 2 * _COLUMNS, 3 * _COLUMNS], axis=-1)
    out = warp(image, _constant(1.0, 0.0))
    np.testing.assert_allclose(out[..., 2], 3 * warp(_COLUMNS, _constant(1.0, 0.0)))


def test_mismatched_flow_raises():
    with pytest.raises(DimensionError):
        warp(_COLUMNS, FlowField.zeros(4, 8))


def test_flow_field_rejects_wrong_channel_count():
    with pytest.raises(DimensionError):
        FlowField(np.zeros((4, 4, 3)))


def test_endpoint_error_of_known_offset():
    assert endpoint_error(_constant(3.0, 4.0), FlowField.zeros(5, 8)) == pytest.approx(5.0)
    assert endpoint_error(_constant(3.0, 4.0), _constant(3.0, 4.0), margin=1) == 0.0
