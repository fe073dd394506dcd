import pytest

from backbone.configuration.backbone_settings import BackboneSettings
from fusion.configuration.fusion_settings import FusionSettings
from fusion.configuration.model_settings import ModelSettings
from gamevolt.logging import Logger, get_logger
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from training.sample_preparer import SamplePreparer
from video.configuration.normalization_spec import NormalizationSpec
from video.configuration.synth_dataset_settings import SynthDatasetSettings
from video.synthetic.motion_direction import MotionDirection
from video.synthetic.shape_kind import ShapeKind
from video.synthetic.synthetic_dataset import SyntheticDataset
from video.synthetic.synthetic_dataset_generator import generate_synthetic_dataset


@pytest.fixture
def logger() -> Logger:
    return get_logger(name="two-stream-tests", verbose=True)


@pytest.fixture
def tiny_model_settings() -> ModelSettings:
    """4 frames of 8×8, 8 tokens per stream pooled down to 2."""
    return ModelSettings(
        frames=4,
        height=8,
        width=8,
        num_classes=3,
        backbone=BackboneSettings(
            patch_size=(2, 4, 4),
            embed_dim=8,
            heads=2,
            pool_strides=[2, 2],
            feedforward_dim=16,
            dropout=0.0,
            output_dim=8,
        ),
        fusion=FusionSettings(heads=2, feedforward_dim=16, encoder_layers=1, encoder_dropout=0.1),
    )


@pytest.fixture
def small_synth_settings() -> SynthDatasetSettings:
    return SynthDatasetSettings(clips_per_class=10, frames=4, height=16, width=16, shape_size=5, speed=2, noise=0.05, seed=3)


@pytest.fixture
def tiny_dataset(logger) -> SyntheticDataset:
    """3 classes × 4 clips of 4×8×8: 6 train, 3 val, 3 test."""
    settings = SynthDatasetSettings(
        appearances=[ShapeKind.SQUARE],
        motions=[MotionDirection.EAST, MotionDirection.WEST, MotionDirection.SOUTH],
        clips_per_class=4,
        frames=4,
        height=8,
        width=8,
        shape_size=3,
        speed=1,
        seed=5,
        train_fraction=0.5,
        val_fraction=0.25,
    )
    return generate_synthetic_dataset(logger, settings)


@pytest.fixture
def fast_flow_settings() -> FlowSolverSettings:
    return FlowSolverSettings(iterations=20, pyramid_levels=1, warps_per_level=1)


@pytest.fixture
def preparer(logger, fast_flow_settings) -> SamplePreparer:
    return SamplePreparer(logger, fast_flow_settings, NormalizationSpec())
