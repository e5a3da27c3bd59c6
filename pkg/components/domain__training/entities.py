from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal

import torch

CheckpointStage = Literal["stage1", "full", "baseline"]
TrainingStage = Literal["stage1", "stage2", "baseline"]


@dataclass
class MetricEntry:
    stage: TrainingStage
    epoch: int
    step: int
    train_loss: float
    selection_auroc: float | None = None
    selection_accuracy: float | None = None


@dataclass
class Checkpoint:
    """Persisted model state: a manifest plus named float32 tensors."""

    stage: CheckpointStage
    manifest: dict[str, Any]
    tensors: dict[str, torch.Tensor]
    path: Path | None = None

    @property
    def config_hash(self) -> str:
        return str(self.manifest.get("config_hash", ""))

    @property
    def component_names(self) -> list[str]:
        return sorted(self.manifest.get("components", {}))

    def component_state(self, component: str) -> dict[str, torch.Tensor]:
        prefix = f"{component}."
        return {name[len(prefix) :]: tensor for name, tensor in self.tensors.items() if name.startswith(prefix)}


@dataclass
class Provenance:
    """How a model came to be; serialized into the checkpoint manifest next to its tensors."""

    stage: CheckpointStage
    config: dict[str, Any] = field(default_factory=dict)
    config_hash: str = ""
    backbone: dict[str, Any] = field(default_factory=dict)
    metric_history: list[MetricEntry] = field(default_factory=list)
    run_stats: dict[str, int] = field(default_factory=dict)
    carry_forward: list[str] = field(default_factory=list)
