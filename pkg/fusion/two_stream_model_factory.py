from autodiff.rng import spawn_generator
from fusion.configuration.model_settings import ModelSettings
from fusion.two_stream_model import TwoStreamModel
from gamevolt.logging import Logger


class TwoStreamModelFactory:
    def __init__(self, logger: Logger, settings: ModelSettings, head_dropout: float) -> None:
        self._logger = logger
        self._settings = settings
        self._head_dropout = head_dropout

    def create(self, seed: int) -> TwoStreamModel:
        model = TwoStreamModel(self._settings, self._head_dropout, spawn_generator(seed, 0))
        rgb_tokens, dim = model.rgb_encoder.output_shape
        self._logger.info(
            f"Created two-stream model: {model.parameter_count()} parameters, "
            f"{rgb_tokens}x{dim} stream outputs, {model.fusion_input.sequence_length} fusion positions, "
            f"{self._settings.fusion.stream_mode.name}."
        )
        return model
