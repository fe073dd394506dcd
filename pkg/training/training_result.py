from dataclasses import dataclass, field

from training.checkpoint import Checkpoint
from training.epoch_record import EpochRecord


@dataclass
class TrainingResult:
    checkpoint: Checkpoint
    history: list[EpochRecord] = field(default_factory=list)
    stopped_early: bool = False

    @property
    def epochs_run(self) -> int:
        return len(self.history)
