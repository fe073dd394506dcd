class NonFiniteLossError(ArithmeticError):
    def __init__(self, epoch: int, batch: int, loss: float) -> None:
        super().__init__(f"non-finite loss {loss} at epoch {epoch}, batch {batch}")
        self.epoch = epoch
        self.batch = batch
        self.loss = loss


class EmptyDatasetError(ValueError):
    """A split that must contain clips is empty."""


class CheckpointFormatError(ValueError):
    """Checkpoint bytes do not follow the expected layout or version."""
