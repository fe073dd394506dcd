import math


class EarlyStopping:
    """
    Tracks the best validation loss. Only a strictly lower loss counts as an
    improvement; training stops once `patience` epochs pass without one.
    """

    def __init__(self, patience: int) -> None:
        self._patience = patience
        self.best_loss = math.inf
        self.best_epoch = 0
        self.epochs_since_best = 0

    def update(self, epoch: int, loss: float) -> bool:
        """Record epoch (1-based); returns True when it is the new best."""
        if loss < self.best_loss:
            self.best_loss = loss
            self.best_epoch = epoch
            self.epochs_since_best = 0
            return True
        self.epochs_since_best += 1
        return False

    @property
    def should_stop(self) -> bool:
        return self.epochs_since_best >= self._patience
