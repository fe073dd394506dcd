from video.video_clip import VideoClip


def temporal_subsample(total: int, target: int) -> list[int]:
    """
    `target` evenly spaced frame indices out of `total`: floor(i·(L−1)/(S−1)).

    Indices repeat when target > total.
    """
    if total < 1 or target < 1:
        raise ValueError(f"temporal_subsample needs total >= 1 and target >= 1, got ({total}, {target})")
    if target == 1:
        return [0]
    return [(i * (total - 1)) // (target - 1) for i in range(target)]


def temporal_subsample_clip(clip: VideoClip, target: int) -> VideoClip:
    if clip.frame_count == target:
        return clip
    return clip.with_frames(clip.frames[temporal_subsample(clip.frame_count, target)])
