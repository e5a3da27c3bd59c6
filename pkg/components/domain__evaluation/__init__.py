from components.domain__evaluation.entities import MetricsReport, ReportFormat, RocPoint, SampleScore, TableRow
from components.domain__evaluation.errors import (
    EmptyInputError,
    EvaluationError,
    UndefinedMetricError,
    UnlabeledSplitError,
)

__all__ = [
    "EmptyInputError",
    "EvaluationError",
    "MetricsReport",
    "ReportFormat",
    "RocPoint",
    "SampleScore",
    "TableRow",
    "UndefinedMetricError",
    "UnlabeledSplitError",
]
