import numpy as np
import pytest
from scipy.stats import chi2_contingency

from gamevolt.configuration.errors.settings_error import SettingsError
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from optical_flow.horn_schunck_estimator import HornSchunckEstimator
from video.configuration.synth_dataset_settings import SynthDatasetSettings
from video.errors import DatasetConfigError
from video.synthetic.motion_direction import MotionDirection
from video.synthetic.shape_kind import ShapeKind
from video.synthetic.synthetic_dataset_generator import SyntheticDatasetGenerator, class_name, generate_synthetic_dataset

_COMPASS = [MotionDirection.EAST, MotionDirection.NORTH, MotionDirection.WEST, MotionDirection.SOUTH]


def test_four_classes_of_thirty_split_84_12_24(logger):
    settings = SynthDatasetSettings(appearances=[ShapeKind.SQUARE], motions=_COMPASS, clips_per_class=30)
    dataset = generate_synthetic_dataset(logger, settings)

    assert dataset.counts() == {"train": 84, "val": 12, "test": 24}
    assert len(dataset) == 120


def test_every_split_is_stratified(logger, small_synth_settings):
    dataset = generate_synthetic_dataset(logger, small_synth_settings)
    for split in ("train", "val", "test"):
        labels = [clip.label for clip in dataset.split(split)]
        assert len(set(np.bincount(labels, minlength=small_synth_settings.class_count))) == 1


def test_same_seed_gives_identical_datasets(logger, small_synth_settings):
    a = generate_synthetic_dataset(logger, small_synth_settings)
    b = generate_synthetic_dataset(logger, small_synth_settings)

    for split in ("train", "val", "test"):
        assert [c.clip_id for c in a.split(split)] == [c.clip_id for c in b.split(split)]
        for x, y in zip(a.split(split), b.split(split)):
            np.testing.assert_array_equal(x.frames, y.frames)


def test_class_names_are_appearance_major(logger, small_synth_settings):
    generator = SyntheticDatasetGenerator(logger, small_synth_settings)
    assert generator.class_names[:2] == ["square-east", "square-north"]
    assert generator.class_names[4] == "disc-east"
    assert class_name(ShapeKind.DIAMOND, MotionDirection.SOUTHWEST) == "diamond-southwest"


def test_clip_geometry_and_ground_truth_motion(logger, small_synth_settings):
    generator = SyntheticDatasetGenerator(logger, small_synth_settings)
    clip = generator.render_clip(0, 0)

    assert clip.frames.shape == (4, 16, 16, 3)
    assert clip.displacement == (2, 0)
    assert np.all((clip.frames >= 0.0) & (clip.frames <= 1.0))


def test_shape_moves_by_the_configured_speed(logger, small_synth_settings):
    clip = SyntheticDatasetGenerator(logger, small_synth_settings).render_clip(0, 1)  # square-east
    fg = np.asarray(small_synth_settings.foreground)

    columns = [np.flatnonzero(np.all(np.isclose(frame, fg), axis=-1).any(axis=0)) for frame in clip.frames]

    assert [c[0] - columns[0][0] for c in columns] == [0, 2, 4, 6]


def test_motion_only_pair_has_matching_pixel_statistics(logger):
    settings = SynthDatasetSettings(
        appearances=[ShapeKind.SQUARE], motions=[MotionDirection.EAST, MotionDirection.WEST], clips_per_class=30, seed=11
    )
    generator = SyntheticDatasetGenerator(logger, settings)
    edges = np.linspace(0.0, 1.0, 21)

    histograms = []
    for label in (0, 1):
        values = np.concatenate([generator.render_clip(label, i).frames[0, ..., 0].ravel() for i in range(30)])
        histograms.append(np.histogram(values, bins=edges)[0])
    table = np.array(histograms)
    table = table[:, table.sum(axis=0) > 0]

    assert chi2_contingency(table).pvalue > 0.01
    assert generator.render_clip(0, 0).displacement != generator.render_clip(1, 0).displacement


def test_oversized_shape_is_rejected(logger):
    with pytest.raises(DatasetConfigError, match="shape_size"):
        SyntheticDatasetGenerator(logger, SynthDatasetSettings(shape_size=40))


def test_travel_beyond_the_frame_is_rejected(logger):
    with pytest.raises(DatasetConfigError, match="travel"):
        SyntheticDatasetGenerator(logger, SynthDatasetSettings(speed=5))


@pytest.mark.parametrize("speed", [0, -1])
def test_stationary_or_negative_speed_is_rejected(speed):
    with pytest.raises(SettingsError, match="speed must be >= 1"):
        SynthDatasetSettings(speed=speed)


@pytest.mark.parametrize("label", range(8))
def test_estimated_flow_on_the_shape_follows_the_ground_truth_motion(logger, label):
    settings = SynthDatasetSettings()
    generator = SyntheticDatasetGenerator(logger, settings)
    estimator = HornSchunckEstimator(FlowSolverSettings())
    foreground = np.asarray(settings.foreground)

    for index in range(5):
        clip = generator.render_clip(label, index)
        assert clip.displacement is not None
        support = np.all(np.isclose(clip.frames[0], foreground), axis=-1)
        flow = estimator.estimate(clip.frames[0], clip.frames[1])

        mean_flow = (flow.horizontal[support].mean(), flow.vertical[support].mean())
        for estimated, truth in zip(mean_flow, clip.displacement):
            if truth:
                assert np.sign(estimated) == np.sign(truth), (clip.clip_id, mean_flow)
