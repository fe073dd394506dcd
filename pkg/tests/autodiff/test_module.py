import numpy as np
import pytest

from autodiff.errors import UsageError
from autodiff.module import Module


class _Leaf(Module):
    def __init__(self) -> None:
        super().__init__()
        self.weight = self.add_parameter("weight", np.ones((2, 3)))
        self.bias = self.add_parameter("bias", np.zeros(3))


class _Tree(Module):
    def __init__(self) -> None:
        super().__init__()
        self.scale = self.add_parameter("scale", np.array([2.0]))
        self.first = self.add_child("first", _Leaf())
        self.second = self.add_child("second", _Leaf())


def test_named_parameters_follow_registration_order():
    names = [name for name, _ in _Tree().named_parameters()]
    assert names == ["scale", "first.weight", "first.bias", "second.weight", "second.bias"]


def test_parameter_count():
    assert _Tree().parameter_count() == 1 + 2 * (6 + 3)


def test_duplicate_registration_raises():
    leaf = _Leaf()
    with pytest.raises(UsageError):
        leaf.add_parameter("weight", np.zeros(1))


def test_eval_propagates_to_children():
    tree = _Tree()
    tree.eval()
    assert not tree.first.training and not tree.second.training
    tree.train()
    assert tree.second.training


def test_state_dict_is_a_copy():
    tree = _Tree()
    state = tree.state_dict()
    state["scale"][0] = 99.0
    assert tree.scale.data[0] == 2.0


def test_load_state_dict_copies_values():
    source, target = _Tree(), _Tree()
    source.first.weight.data[:] = 7.0

    target.load_state_dict(source.state_dict())

    np.testing.assert_array_equal(target.first.weight.data, np.full((2, 3), 7.0))


def test_load_state_dict_strict_reports_missing_and_unexpected():
    state = _Tree().state_dict()
    del state["scale"]
    state["extra"] = np.zeros(1)
    with pytest.raises(UsageError, match="missing \\['scale'\\], unexpected \\['extra'\\]"):
        _Tree().load_state_dict(state)


def test_load_state_dict_rejects_shape_mismatch():
    state = _Tree().state_dict()
    state["first.bias"] = np.zeros(4)
    with pytest.raises(UsageError, match="first.bias"):
        _Tree().load_state_dict(state)
