from components.training__torch.checkpoint import (
    checkpoint_from_model,
    load_checkpoint,
    restore_model,
    save_checkpoint,
    write_checkpoint,
)
from components.training__torch.features import FeatureBank, FeatureBatch
from components.training__torch.losses import BCE_EPS, bce_loss
from components.training__torch.loop import build_optimizer, fit, score_bank, train_step
from components.training__torch.models import (
    BaselineModel,
    FusionModel,
    MemeClassifier,
    ModelArchitecture,
    Stage1Model,
    build_model,
)
from components.training__torch.run_log import RunLog
from components.training__torch.scoring import TrainedScorer
from components.training__torch.stages import (
    architecture_for,
    build_phi,
    train_baseline,
    train_stage1,
    train_stage2,
)

__all__ = [
    "BCE_EPS",
    "BaselineModel",
    "FeatureBank",
    "FeatureBatch",
    "FusionModel",
    "MemeClassifier",
    "ModelArchitecture",
    "RunLog",
    "Stage1Model",
    "TrainedScorer",
    "architecture_for",
    "bce_loss",
    "build_model",
    "build_optimizer",
    "build_phi",
    "checkpoint_from_model",
    "fit",
    "load_checkpoint",
    "restore_model",
    "save_checkpoint",
    "score_bank",
    "train_baseline",
    "train_stage1",
    "train_stage2",
    "train_step",
    "write_checkpoint",
]
