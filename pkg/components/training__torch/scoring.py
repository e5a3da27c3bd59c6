from collections.abc import Sequence
from pathlib import Path

from components.app__backbone.ports import Backbone
from components.app__evaluation.ports import MemeScorer
from components.domain__meme.entities import MemeRecord
from components.domain__training.entities import Checkpoint
from components.training__torch.checkpoint import backbone_for, load_checkpoint, restore_model
from components.training__torch.features import FeatureBank
from components.training__torch.loop import score_bank
from components.training__torch.stages import build_phi_for_checkpoint

SHARED_PROTOCOL_NOTE = "baselines and fusion models share one head, optimizer and epoch protocol"


class TrainedScorer(MemeScorer):
    """Inference wrapper around a restored checkpoint; scoring is deterministic (dropout off)."""

    def __init__(self, checkpoint: Checkpoint, backbone: Backbone | None = None, batch_size: int = 64) -> None:
        self.checkpoint = checkpoint
        self.backbone = backbone_for(checkpoint, backbone)
        self.model = restore_model(checkpoint, self.backbone)
        self.batch_size = batch_size
        self.config_hash = checkpoint.config_hash
        self.notes = [SHARED_PROTOCOL_NOTE] if checkpoint.stage == "baseline" else []
        self._phi = build_phi_for_checkpoint(checkpoint, self.backbone)

    @classmethod
    def from_path(cls, path: Path, backbone: Backbone | None = None) -> "TrainedScorer":
        return cls(load_checkpoint(path), backbone)

    def score(self, records: Sequence[MemeRecord]) -> list[float]:
        bank = FeatureBank.build(
            records,
            self.backbone,
            self.model.architecture.template,
            phi=self._phi,
            batch_size=self.batch_size,
        )
        return [float(value) for value in score_bank(self.model, bank, self.batch_size).tolist()]
