import json

import numpy as np
import pytest
import yaml
from PIL import Image
from scipy.ndimage import gaussian_filter

from cli.application import run
from cli.exit_code import ExitCode
from gamevolt.io.utils import load_json_lines
from optical_flow.flo2_codec import read_flo2
from training.checkpoint import load_checkpoint
from training.errors import NonFiniteLossError
from video.clip_loader import write_frame


def _config(tmp_path) -> dict:
    return {
        "name": "two-stream-tests",
        "logging": {"minimum_level": "WARNING"},
        "model": {
            "frames": 4,
            "height": 8,
            "width": 8,
            "num_classes": 3,
            "backbone": {
                "patch_size": [2, 4, 4],
                "embed_dim": 8,
                "heads": 2,
                "pool_strides": [2, 2],
                "feedforward_dim": 16,
                "output_dim": 8,
            },
            "fusion": {"heads": 2, "feedforward_dim": 16},
        },
        "train": {"batch_size": 4, "max_epochs": 2, "patience": 1, "prefetch_depth": 0, "out_dir": str(tmp_path / "run")},
        "data": {
            "root": str(tmp_path / "data"),
            "synthetic": {
                "appearances": ["SQUARE"],
                "motions": ["EAST", "WEST", "SOUTH"],
                "clips_per_class": 4,
                "frames": 4,
                "height": 8,
                "width": 8,
                "shape_size": 3,
                "speed": 1,
                "train_fraction": 0.5,
                "val_fraction": 0.25,
            },
        },
        "flow": {"iterations": 20, "pyramid_levels": 1, "warps_per_level": 1},
    }


@pytest.fixture
def config_path(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    path = tmp_path / "config.yml"
    path.write_text(yaml.safe_dump(_config(tmp_path)), encoding="utf-8")
    return path


def _stdout_json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_gen_data_writes_a_manifest(config_path, tmp_path, capsys):
    assert run(["--config", str(config_path), "gen-data"]) == ExitCode.SUCCESS

    out = _stdout_json(capsys)
    assert (tmp_path / "data" / "manifest.json").is_file()
    assert out["counts"] == {"train": 6, "val": 3, "test": 3}
    assert out["classes"] == ["square-east", "square-west", "square-south"]


def test_gen_data_with_the_same_seed_reproduces_the_manifest(config_path, tmp_path, capsys):
    run(["--config", str(config_path), "--seed", "4", "gen-data", "--out", str(tmp_path / "a")])
    first = _stdout_json(capsys)["manifest_sha256"]
    run(["--config", str(config_path), "--seed", "4", "gen-data", "--out", str(tmp_path / "b")])
    second = _stdout_json(capsys)["manifest_sha256"]
    run(["--config", str(config_path), "--seed", "5", "gen-data", "--out", str(tmp_path / "c")])
    third = _stdout_json(capsys)["manifest_sha256"]

    assert first == second != third


def test_unknown_config_key_is_a_usage_error(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    config = _config(tmp_path)
    config["model"]["bogus_width"] = 3
    path = tmp_path / "bad.yml"
    path.write_text(yaml.safe_dump(config), encoding="utf-8")

    assert run(["--config", str(path), "gen-data"]) == ExitCode.USAGE
    assert "bogus_width" in capsys.readouterr().err


def test_missing_config_file_is_a_usage_error(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(["--config", str(tmp_path / "absent.yml"), "gen-data"]) == ExitCode.USAGE


def test_unknown_command_exits_with_usage(config_path):
    with pytest.raises(SystemExit) as info:
        run(["--config", str(config_path), "dance"])
    assert info.value.code == 2


def test_flow_of_identical_images_is_white(config_path, tmp_path, capsys):
    frame = np.random.default_rng(0).random((12, 12, 3))
    write_frame(tmp_path / "a.png", frame)
    write_frame(tmp_path / "b.png", frame)

    code = run(["--config", str(config_path), "flow", str(tmp_path / "a.png"), str(tmp_path / "b.png"), str(tmp_path / "out" / "pair")])

    assert code == ExitCode.SUCCESS
    out = _stdout_json(capsys)
    with Image.open(out["png"]) as image:
        assert np.asarray(image).min() >= 254
    np.testing.assert_allclose(read_flo2(out["flo2"]).vectors, np.zeros((12, 12, 2)), atol=1e-9)
    assert out["max_magnitude"] < 1e-9


def test_flow_with_a_missing_image_names_the_path(config_path, tmp_path, capsys):
    write_frame(tmp_path / "a.png", np.zeros((4, 4, 3)))

    code = run(["--config", str(config_path), "flow", str(tmp_path / "a.png"), str(tmp_path / "nope.png"), str(tmp_path / "pair")])

    assert code == ExitCode.USAGE
    assert "nope.png" in capsys.readouterr().err


def test_train_eval_predict_round_trip(config_path, tmp_path, capsys):
    assert run(["--config", str(config_path), "gen-data"]) == ExitCode.SUCCESS
    capsys.readouterr()

    assert run(["--config", str(config_path), "train", "--max-epochs", "1"]) == ExitCode.SUCCESS
    trained = _stdout_json(capsys)
    checkpoint = load_checkpoint(trained["checkpoint"])
    assert checkpoint.class_names == ["square-east", "square-west", "square-south"]
    assert trained["epochs"] == 1
    assert len(load_json_lines(trained["metrics"])) == 1

    assert run(["--config", str(config_path), "eval", trained["checkpoint"], str(tmp_path / "data")]) == ExitCode.SUCCESS
    evaluated = _stdout_json(capsys)
    assert isinstance(evaluated["top1"], float) and 0.0 <= evaluated["top1"] <= 1.0
    assert evaluated["split"] == "test" and evaluated["sample_count"] == 3

    clip_dir = next((tmp_path / "data" / "test").glob("*/*"))
    assert run(["--config", str(config_path), "predict", trained["checkpoint"], str(clip_dir)]) == ExitCode.SUCCESS
    predicted = _stdout_json(capsys)
    assert abs(sum(predicted["probabilities"]) - 1.0) < 1e-6
    assert predicted["class"] in checkpoint.class_names


def test_train_without_a_manifest_generates_in_memory(config_path, tmp_path, capsys):
    assert run(["--config", str(config_path), "train", "--max-epochs", "1", "--out", str(tmp_path / "mem")]) == ExitCode.SUCCESS
    assert (tmp_path / "mem" / "checkpoint.tsvt").is_file()


def test_class_count_mismatch_is_a_usage_error(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = _config(tmp_path)
    config["model"]["num_classes"] = 5
    path = tmp_path / "five.yml"
    path.write_text(yaml.safe_dump(config), encoding="utf-8")

    assert run(["--config", str(path), "train", "--max-epochs", "1"]) == ExitCode.USAGE


def test_non_finite_loss_exits_with_3(config_path, monkeypatch):
    def diverge(self, train_clips, val_clips):
        raise NonFiniteLossError(1, 1, float("nan"))

    monkeypatch.setattr("training.trainer.Trainer.train", diverge)

    assert run(["--config", str(config_path), "train", "--max-epochs", "1"]) == ExitCode.NUMERIC


def test_unexpected_errors_exit_with_1(config_path, monkeypatch):
    def explode(self, train_clips, val_clips):
        raise RuntimeError("boom")

    monkeypatch.setattr("training.trainer.Trainer.train", explode)

    assert run(["--config", str(config_path), "train", "--max-epochs", "1"]) == ExitCode.FAILURE


# Fully saturated colour-wheel entry for each compass direction of image motion (rows grow southward).
COMPASS_HUES = {
    "east": ((0, 2), (255, 0, 0)),
    "south": ((2, 0), (255, 230, 0)),
    "west": ((0, -2), (0, 209, 255)),
    "north": ((-2, 0), (88, 0, 255)),
}


def _hue_angles(rgb: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    hsv = np.asarray(Image.fromarray(np.ascontiguousarray(rgb, dtype=np.uint8)).convert("HSV"), dtype=np.float64)
    return hsv[..., 0] * (2.0 * np.pi / 256.0), hsv[..., 1] / 255.0


def _circular_distance(a: float, b: float) -> float:
    return abs(float(np.angle(np.exp(1j * (a - b)))))


@pytest.mark.parametrize("direction", sorted(COMPASS_HUES))
def test_flow_of_a_translated_pair_is_coloured_by_its_direction(tmp_path, monkeypatch, capsys, direction):
    monkeypatch.chdir(tmp_path)
    config = _config(tmp_path)
    del config["flow"]  # the default pyramid resolves a two pixel shift
    path = tmp_path / "config.yml"
    path.write_text(yaml.safe_dump(config), encoding="utf-8")

    noise = gaussian_filter(np.random.default_rng(3).random((48, 48)), 2.0, mode="wrap")
    texture = (noise - noise.min()) / np.ptp(noise)
    (dy, dx), _ = COMPASS_HUES[direction]
    write_frame(tmp_path / "a.png", np.repeat(texture[..., None], 3, axis=2))
    write_frame(tmp_path / "b.png", np.repeat(np.roll(texture, (dy, dx), axis=(0, 1))[..., None], 3, axis=2))

    assert run(["--config", str(path), "flow", str(tmp_path / "a.png"), str(tmp_path / "b.png"), str(tmp_path / "pair")]) == ExitCode.SUCCESS
    with Image.open(_stdout_json(capsys)["png"]) as image:
        hue, saturation = _hue_angles(np.asarray(image.convert("RGB"))[8:-8, 8:-8])

    dominant = float(np.angle(np.sum(saturation * np.exp(1j * hue))))
    table = {name: float(_hue_angles(np.array([[rgb]]))[0][0, 0]) for name, (_, rgb) in COMPASS_HUES.items()}
    nearest = min(table, key=lambda name: _circular_distance(dominant, table[name]))
    assert nearest == direction
    assert _circular_distance(dominant, table[direction]) < np.deg2rad(20.0)
