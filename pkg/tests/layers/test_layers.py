import math

import numpy as np
import pytest

from autodiff.errors import ParameterError
from autodiff.rng import create_generator
from autodiff.tensor import Tensor
from layers.dropout import Dropout
from layers.feed_forward import FeedForward
from layers.layer_norm import LayerNorm
from layers.linear import Linear


def test_linear_initialisation_is_bounded():
    layer = Linear(16, 4, create_generator(0))
    bound = 1.0 / math.sqrt(16)
    assert np.all(np.abs(layer.weight.data) <= bound)
    assert layer.bias is not None and np.all(np.abs(layer.bias.data) <= bound)


def test_linear_without_bias_registers_weight_only():
    layer = Linear(3, 2, create_generator(0), bias=False)
    assert [name for name, _ in layer.named_parameters()] == ["weight"]


def test_linear_zero_gives_zero_output():
    layer = Linear(3, 2, create_generator(0))
    layer.zero_()
    np.testing.assert_array_equal(layer.forward(Tensor(np.ones((4, 3)))).data, np.zeros((4, 2)))


def test_layer_norm_starts_as_plain_standardisation():
    norm = LayerNorm(4)
    out = norm.forward(Tensor([[1.0, 2.0, 3.0, 4.0]])).data
    assert abs(out.mean()) < 1e-12
    assert out[0, 0] < 0 < out[0, 3]


def test_dropout_module_is_identity_in_eval_mode():
    dropout = Dropout(0.9, create_generator(0))
    dropout.eval()
    x = Tensor(np.ones(10))
    assert dropout.forward(x) is x


def test_dropout_module_masks_in_training():
    out = Dropout(0.5, create_generator(0)).forward(Tensor(np.ones(1000))).data
    assert 0 < np.count_nonzero(out) < 1000


def test_dropout_module_rejects_probability_one():
    with pytest.raises(ParameterError):
        Dropout(1.0, create_generator(0))


def test_feed_forward_preserves_width():
    ff = FeedForward(8, 32, 0.0, create_generator(0))
    assert ff.forward(Tensor(np.ones((3, 8)))).shape == (3, 8)
    assert ff.parameter_count() == 8 * 32 + 32 + 32 * 8 + 8
