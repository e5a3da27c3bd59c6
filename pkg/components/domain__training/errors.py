class TrainingError(Exception):
    """Base training error."""


class RunConfigError(TrainingError, ValueError):
    """Raised when a run configuration is invalid or references missing paths."""


class TrainingAbortedError(TrainingError):
    """Raised when training diverges (non-finite loss)."""


class CheckpointCorruptionError(TrainingError):
    """Raised when a checkpoint fails integrity verification."""


class CompatibilityError(TrainingError):
    """Raised when a checkpoint does not fit the configuration or backbone it is used with."""
