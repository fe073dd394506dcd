import numpy as np

from autodiff.tensor import FloatArray
from video.configuration.normalization_spec import NormalizationSpec
from video.video_clip import VideoClip


def normalize_frames(frames: FloatArray, spec: NormalizationSpec) -> FloatArray:
    return (frames - np.asarray(spec.mean)) / np.asarray(spec.std)


def denormalize_frames(frames: FloatArray, spec: NormalizationSpec) -> FloatArray:
    return frames * np.asarray(spec.std) + np.asarray(spec.mean)


def normalize(clip: VideoClip, spec: NormalizationSpec) -> VideoClip:
    return clip.with_frames(normalize_frames(clip.frames, spec))


def denormalize(clip: VideoClip, spec: NormalizationSpec) -> VideoClip:
    return clip.with_frames(denormalize_frames(clip.frames, spec))
