import struct

import numpy as np
import pytest

from autodiff.adam_optimizer import AdamOptimizer
from autodiff.rng import create_generator
from fusion.two_stream_model import TwoStreamModel
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from training.checkpoint import Checkpoint, decode_checkpoint, encode_checkpoint, load_checkpoint, restore_model, save_checkpoint
from training.errors import CheckpointFormatError
from video.configuration.normalization_spec import NormalizationSpec


@pytest.fixture
def checkpoint(tiny_model_settings) -> Checkpoint:
    model = TwoStreamModel(tiny_model_settings, 0.3, create_generator(1))
    optimizer = AdamOptimizer(dict(model.named_parameters()), learning_rate=1e-3)
    rng = create_generator(2)
    for param in model.parameters():
        param.grad = rng.normal(size=param.shape)
    optimizer.step()
    return Checkpoint(
        model=tiny_model_settings,
        class_names=["a", "b", "c"],
        parameters=model.state_dict(),
        epoch=4,
        best_val_loss=0.8125,
        head_dropout=0.3,
        flow=FlowSolverSettings(alpha=9.0),
        normalization=NormalizationSpec.swin(),
        optimizer=optimizer.state_dict(),
    )


def test_round_trip_preserves_every_field(checkpoint, tmp_path):
    path = tmp_path / "model.tsvt"
    save_checkpoint(checkpoint, path)
    restored = load_checkpoint(path)

    assert restored.model == checkpoint.model
    assert restored.class_names == checkpoint.class_names
    assert (restored.epoch, restored.best_val_loss, restored.head_dropout) == (4, 0.8125, 0.3)
    assert restored.flow == checkpoint.flow
    assert restored.normalization == checkpoint.normalization
    assert list(restored.parameters) == list(checkpoint.parameters)
    for name, values in checkpoint.parameters.items():
        np.testing.assert_array_equal(restored.parameters[name], values)
    for name, state in checkpoint.optimizer.items():
        assert restored.optimizer[name]["t"] == state["t"] == 1
        np.testing.assert_array_equal(restored.optimizer[name]["m"], state["m"])
        np.testing.assert_array_equal(restored.optimizer[name]["v"], state["v"])


def test_preamble_carries_magic_and_version(checkpoint):
    magic, version, _ = struct.unpack_from("<4sII", encode_checkpoint(checkpoint))
    assert (magic, version) == (b"TSVT", 1)


def test_unknown_version_is_rejected(checkpoint):
    payload = bytearray(encode_checkpoint(checkpoint))
    struct.pack_into("<I", payload, 4, 2)
    with pytest.raises(CheckpointFormatError, match="version 2"):
        decode_checkpoint(bytes(payload))


def test_bad_magic_is_rejected(checkpoint):
    with pytest.raises(CheckpointFormatError, match="magic"):
        decode_checkpoint(b"NOPE" + encode_checkpoint(checkpoint)[4:])


def test_truncated_payload_is_rejected(checkpoint):
    with pytest.raises(CheckpointFormatError):
        decode_checkpoint(encode_checkpoint(checkpoint)[:-8])


def test_restored_model_predicts_like_the_original(checkpoint, tiny_model_settings):
    original = TwoStreamModel(tiny_model_settings, 0.3, create_generator(9))
    original.load_state_dict(checkpoint.parameters)
    rng = create_generator(3)
    rgb, flow = rng.normal(size=tiny_model_settings.clip_shape), rng.normal(size=tiny_model_settings.clip_shape)

    restored = restore_model(checkpoint)

    assert not restored.training
    np.testing.assert_array_equal(restored.predict_probabilities(rgb, flow), original.predict_probabilities(rgb, flow))
