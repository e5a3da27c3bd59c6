from components.domain__training.entities import Checkpoint, CheckpointStage, MetricEntry, Provenance, TrainingStage
from components.domain__training.errors import (
    CheckpointCorruptionError,
    CompatibilityError,
    RunConfigError,
    TrainingAbortedError,
    TrainingError,
)

__all__ = [
    "Checkpoint",
    "CheckpointCorruptionError",
    "CheckpointStage",
    "CompatibilityError",
    "MetricEntry",
    "Provenance",
    "RunConfigError",
    "TrainingAbortedError",
    "TrainingError",
    "TrainingStage",
]
