from dataclasses import dataclass

from gamevolt.configuration.settings_base import SettingsBase


@dataclass
class FlowSolverSettings(SettingsBase):
    alpha: float = 15.0  # smoothness weight, on the 0-255 intensity scale
    iterations: int = 200  # Jacobi iterations per warp per level
    pyramid_levels: int = 3
    tolerance: float = 1e-4  # mean |Δflow| below which a level stops early
    presmooth_sigma: float = 1.0
    warps_per_level: int = 2
    workers: int = 1
    max_norm: float | None = None  # flow_to_rgb normaliser; None = per-field maximum

    def validate(self) -> None:
        if self.alpha <= 0 or self.tolerance <= 0:
            raise ValueError("alpha and tolerance must be positive")
        if self.iterations < 1 or self.pyramid_levels < 1 or self.warps_per_level < 1 or self.workers < 1:
            raise ValueError("iterations, pyramid_levels, warps_per_level and workers must be >= 1")
        if self.presmooth_sigma < 0:
            raise ValueError(f"presmooth_sigma must be >= 0, got {self.presmooth_sigma}")
        if self.max_norm is not None and self.max_norm <= 0:
            raise ValueError(f"max_norm must be positive, got {self.max_norm}")
