from components.config__pydantic.loader import apply_overrides, build_run_config, load_run_config
from components.config__pydantic.run_config import (
    AblationFlags,
    BackboneSettings,
    DataSettings,
    ModelSettings,
    PhiSettings,
    PromptSettings,
    RunConfig,
    TrainSettings,
)

__all__ = [
    "AblationFlags",
    "BackboneSettings",
    "DataSettings",
    "ModelSettings",
    "PhiSettings",
    "PromptSettings",
    "RunConfig",
    "TrainSettings",
    "apply_overrides",
    "build_run_config",
    "load_run_config",
]
