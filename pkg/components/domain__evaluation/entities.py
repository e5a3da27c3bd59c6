from dataclasses import dataclass, field
from typing import Literal

ReportFormat = Literal["json", "csv", "markdown"]


@dataclass(frozen=True)
class SampleScore:
    id: str
    score: float
    label: int
    prediction: int


@dataclass(frozen=True)
class RocPoint:
    fpr: float
    tpr: float


@dataclass
class MetricsReport:
    split: str
    n: int
    accuracy: float
    auroc: float
    records: list[SampleScore]
    config_hash: str
    roc_points: list[RocPoint] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


@dataclass
class TableRow:
    method: str
    accuracy: float
    auroc: float
    config_hash: str
    flags: dict[str, bool] = field(default_factory=dict)
    components: list[str] = field(default_factory=list)
