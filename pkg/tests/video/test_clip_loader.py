import numpy as np
import pytest

from video.clip_loader import ClipLoader, load_clip_dir, write_frame
from video.errors import ClipLoadError


def _write_clip(directory, frames) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for t, frame in enumerate(frames):
        write_frame(directory / f"{t + 1:04d}.png", frame)


def test_identical_frames_have_zero_temporal_variance(logger, tmp_path):
    frame = np.random.default_rng(0).random((8, 8, 3))
    _write_clip(tmp_path / "clip", [frame] * 16)

    clip = load_clip_dir(logger, tmp_path / "clip", 8, 8)

    assert clip.frame_count == 16
    assert np.all(clip.frames.var(axis=0) == 0.0)
    assert clip.clip_id == "clip"


def test_subsampling_follows_the_index_formula(logger, tmp_path):
    _write_clip(tmp_path / "clip", [np.full((4, 4, 3), t / 255.0) for t in range(32)])

    clip = ClipLoader(logger, 4, 4, frames=16).load(tmp_path / "clip")

    expected = [(i * 31) // 15 for i in range(16)]
    np.testing.assert_array_equal(np.rint(clip.frames[:, 0, 0, 0] * 255.0), expected)


def test_frames_are_read_in_lexicographic_order(logger, tmp_path):
    directory = tmp_path / "clip"
    directory.mkdir()
    write_frame(directory / "b.png", np.ones((2, 2, 3)))
    write_frame(directory / "a.png", np.zeros((2, 2, 3)))

    clip = ClipLoader(logger, 2, 2).load(directory, label=3, clip_id="ab")

    assert clip.frames[0].max() == 0.0 and clip.frames[1].min() == 1.0
    assert (clip.label, clip.clip_id) == (3, "ab")


def test_frames_are_resized_to_the_model_geometry(logger, tmp_path):
    _write_clip(tmp_path / "clip", [np.full((16, 12, 3), 0.5)] * 2)
    clip = ClipLoader(logger, 8, 6).load(tmp_path / "clip")
    assert clip.frame_size == (8, 6)
    np.testing.assert_allclose(clip.frames, 128 / 255.0)


def test_corrupt_png_names_the_file(logger, tmp_path):
    _write_clip(tmp_path / "clip", [np.zeros((4, 4, 3))])
    (tmp_path / "clip" / "0002.png").write_bytes(b"\x89PNG not really")

    with pytest.raises(ClipLoadError, match="0002.png") as info:
        ClipLoader(logger, 4, 4).load(tmp_path / "clip")
    assert info.value.path.endswith("0002.png")


def test_mismatched_frame_sizes_name_the_file(logger, tmp_path):
    directory = tmp_path / "clip"
    _write_clip(directory, [np.zeros((4, 4, 3))])
    write_frame(directory / "0002.png", np.zeros((5, 4, 3)))

    with pytest.raises(ClipLoadError, match="0002.png"):
        ClipLoader(logger, 4, 4).load(directory)


def test_empty_directory_is_rejected(logger, tmp_path):
    (tmp_path / "empty").mkdir()
    with pytest.raises(ClipLoadError, match="no PNG frames"):
        ClipLoader(logger, 4, 4).load(tmp_path / "empty")


def test_missing_directory_is_rejected(logger, tmp_path):
    with pytest.raises(ClipLoadError, match="not found"):
        ClipLoader(logger, 4, 4).load(tmp_path / "absent")
