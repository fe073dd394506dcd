from enum import Enum, auto

import numpy as np
from numpy.typing import NDArray


class ShapeKind(Enum):
    SQUARE = auto()
    DISC = auto()
    DIAMOND = auto()

    def mask(self, size: int) -> NDArray[np.bool_]:
        """size×size footprint of the shape."""
        centre = (size - 1) / 2.0
        rows, cols = np.indices((size, size))
        dy, dx = rows - centre, cols - centre
        match self:
            case ShapeKind.SQUARE:
                return np.ones((size, size), dtype=bool)
            case ShapeKind.DISC:
                return dx * dx + dy * dy <= (size / 2.0) ** 2
            case ShapeKind.DIAMOND:
                return np.abs(dx) + np.abs(dy) <= size / 2.0
