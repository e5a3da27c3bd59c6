from bases.platform.tensor_archive import TensorArchiveError
from components.domain__encoding.errors import EncodingError, WeightLoadError
from components.domain__evaluation.errors import EvaluationError
from components.domain__fusion.errors import FusionError
from components.domain__meme.errors import ImageDecodeError, MemeDataError
from components.domain__training.errors import (
    CheckpointCorruptionError,
    CompatibilityError,
    RunConfigError,
    TrainingAbortedError,
    TrainingError,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TRAINING_ABORTED = 3
EXIT_ARTIFACT = 4
EXIT_DECODE = 5

# first match wins
EXIT_CODES: tuple[tuple[type[Exception], int], ...] = (
    (ImageDecodeError, EXIT_DECODE),
    (TrainingAbortedError, EXIT_TRAINING_ABORTED),
    (CheckpointCorruptionError, EXIT_ARTIFACT),
    (CompatibilityError, EXIT_ARTIFACT),
    (WeightLoadError, EXIT_ARTIFACT),
    (TensorArchiveError, EXIT_ARTIFACT),
    (RunConfigError, EXIT_USAGE),
    (MemeDataError, EXIT_USAGE),
    (EvaluationError, EXIT_USAGE),
    (FusionError, EXIT_USAGE),
    (EncodingError, EXIT_USAGE),
    (TrainingError, EXIT_USAGE),
)


def exit_code_for(exc: Exception) -> int | None:
    for error_type, code in EXIT_CODES:
        if isinstance(exc, error_type):
            return code
    return None
