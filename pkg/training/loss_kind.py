from enum import Enum, auto


class LossKind(Enum):
    CROSS_ENTROPY = auto()
