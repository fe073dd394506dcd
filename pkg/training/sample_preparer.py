from __future__ import annotations

import numpy as np

from autodiff.tensor import FloatArray
from gamevolt.logging import Logger
from optical_flow.colour_wheel import flow_to_rgb
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from optical_flow.flow_cache import FlowCache
from optical_flow.flow_estimator import FlowEstimator
from optical_flow.flow_sequence import flow_sequence
from optical_flow.horn_schunck_estimator import HornSchunckEstimator
from training.prepared_sample import PreparedSample
from video.configuration.normalization_spec import NormalizationSpec
from video.normalization import normalize_frames
from video.video_clip import VideoClip


class SamplePreparer:
    """Turns a clip into the two stream inputs; both streams share one normalization."""

    def __init__(
        self,
        logger: Logger,
        flow_settings: FlowSolverSettings,
        normalization: NormalizationSpec,
        cache_dir: str | None = None,
        estimator: FlowEstimator | None = None,
    ) -> None:
        self._logger = logger
        self.flow_settings = flow_settings
        self.normalization = normalization
        self._estimator = estimator or HornSchunckEstimator(flow_settings)
        self.cache = FlowCache(logger, flow_settings, cache_dir)

    def flow_frames(self, clip: VideoClip) -> FloatArray:
        """Flow-RGB stack in [0, 1], one rendered field per frame."""

        def compute() -> FloatArray:
            flows = flow_sequence(clip.frames, self._estimator, self.flow_settings.workers)
            return np.stack([flow_to_rgb(f, self.flow_settings.max_norm) for f in flows])

        return self.cache.get_or_compute(FlowCache.key_for(clip.clip_id, clip.frames), compute)

    def prepare(self, clip: VideoClip) -> PreparedSample:
        return PreparedSample(
            rgb=normalize_frames(clip.frames, self.normalization),
            flow=normalize_frames(self.flow_frames(clip), self.normalization),
            label=clip.label,
            clip_id=clip.clip_id,
        )
