from dataclasses import dataclass, field

from fusion.configuration.model_settings import ModelSettings
from gamevolt.configuration.appsettings_base import AppSettingsBase
from gamevolt.logging.configuration.logging_settings import LoggingSettings
from optical_flow.configuration.flow_solver_settings import FlowSolverSettings
from training.configuration.train_settings import TrainSettings
from video.configuration.data_settings import DataSettings


@dataclass
class AppSettings(AppSettingsBase):
    name: str = "gamevolt.two-stream-video-transformer"
    logging: LoggingSettings = field(default_factory=LoggingSettings)
    model: ModelSettings = field(default_factory=ModelSettings)
    train: TrainSettings = field(default_factory=TrainSettings)
    data: DataSettings = field(default_factory=DataSettings)
    flow: FlowSolverSettings = field(default_factory=FlowSolverSettings)
