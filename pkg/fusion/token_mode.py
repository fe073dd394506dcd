from enum import Enum, auto


class TokenMode(Enum):
    POOLED = auto()  # [class; mean(O_r)E; mean(O_f)E], 3 positions
    ALL_TOKENS = auto()  # [class; O_r E; O_f E], 2·L_o + 1 positions
