from dataclasses import dataclass

from autodiff.tensor import FloatArray


@dataclass(frozen=True)
class PreparedSample:
    rgb: FloatArray  # normalized T×H×W×3 frames
    flow: FloatArray  # normalized T×H×W×3 flow-RGB frames
    label: int | None
    clip_id: str | None
