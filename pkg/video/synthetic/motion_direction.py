from enum import Enum


class MotionDirection(Enum):
    """Compass heading as a unit pixel step (dx, dy); image rows grow southwards."""

    EAST = (1, 0)
    NORTHEAST = (1, -1)
    NORTH = (0, -1)
    NORTHWEST = (-1, -1)
    WEST = (-1, 0)
    SOUTHWEST = (-1, 1)
    SOUTH = (0, 1)
    SOUTHEAST = (1, 1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]
