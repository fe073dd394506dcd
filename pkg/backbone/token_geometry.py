import math
from collections.abc import Sequence

from video.errors import ClipGeometryError


def patch_grid(clip_shape: Sequence[int], patch_size: Sequence[int]) -> tuple[int, int, int]:
    """(T/t_p, H/h_p, W/w_p) for a T×H×W[×C] clip; indivisible extents are rejected by axis name."""
    grid: list[int] = []
    for axis, extent, patch in zip(("T", "H", "W"), clip_shape[:3], patch_size):
        if extent % patch:
            raise ClipGeometryError(f"clip extent {axis}={extent} is not divisible by patch extent {patch}")
        grid.append(extent // patch)
    return grid[0], grid[1], grid[2]


def pooled_token_count(token_count: int, strides: Sequence[int]) -> int:
    """Tokens left after the block stack; stepwise ceilings compose to ⌈L/∏s⌉."""
    for stride in strides:
        token_count = math.ceil(token_count / stride)
    return token_count
