from dataclasses import dataclass, field

from gamevolt.configuration.settings_base import SettingsBase
from video.configuration.normalization_spec import NormalizationSpec
from video.configuration.synth_dataset_settings import SynthDatasetSettings


@dataclass
class DataSettings(SettingsBase):
    root: str = "data/synthetic"
    flow_cache_dir: str | None = None  # None keeps cached flow in memory only
    normalization: NormalizationSpec = field(default_factory=NormalizationSpec)
    synthetic: SynthDatasetSettings = field(default_factory=SynthDatasetSettings)
