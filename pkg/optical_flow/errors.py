class FlowInputError(ValueError):
    """Frames handed to the flow estimator do not form a valid pair or sequence."""


class FlowFormatError(ValueError):
    """A .flo2 file is truncated or carries the wrong magic."""
