from enum import Enum, auto


class StreamMode(Enum):
    TWO_STREAM = auto()
    RGB_ONLY = auto()
    FLOW_ONLY = auto()
