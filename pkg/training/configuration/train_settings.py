from dataclasses import dataclass

from gamevolt.configuration.settings_base import SettingsBase
from training.loss_kind import LossKind


@dataclass
class TrainSettings(SettingsBase):
    learning_rate: float = 2e-4
    batch_size: int = 8
    max_epochs: int = 200
    patience: int = 10
    dropout: float = 0.5  # classifier head
    seed: int = 0
    loss: LossKind = LossKind.CROSS_ENTROPY
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    prefetch_depth: int = 2  # 0 prepares batches on the training thread
    out_dir: str = "runs/latest"

    def validate(self) -> None:
        if self.learning_rate <= 0 or self.eps <= 0:
            raise ValueError("learning_rate and eps must be positive")
        if self.batch_size < 1 or self.max_epochs < 1 or self.patience < 1:
            raise ValueError("batch_size, max_epochs and patience must be >= 1")
        if self.patience > self.max_epochs:
            raise ValueError(f"patience {self.patience} exceeds max_epochs {self.max_epochs}")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError(f"dropout must be in [0, 1), got {self.dropout}")
        if not (0.0 <= self.beta1 < 1.0 and 0.0 <= self.beta2 < 1.0):
            raise ValueError(f"betas must be in [0, 1), got ({self.beta1}, {self.beta2})")
        if self.prefetch_depth < 0:
            raise ValueError(f"prefetch_depth must be >= 0, got {self.prefetch_depth}")
