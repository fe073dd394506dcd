class ClipLoadError(OSError):
    """A frame directory could not be turned into a clip; the message names the file."""

    def __init__(self, message: str, path: str) -> None:
        super().__init__(f"{message}: '{path}'")
        self.path = path


class DatasetConfigError(ValueError):
    """Dataset or clip geometry settings cannot be satisfied."""


class ClipGeometryError(DatasetConfigError):
    """Clip extents are incompatible with the configured patch grid."""
