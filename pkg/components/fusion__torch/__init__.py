from components.fusion__torch.baselines import BASELINE_MODES, BaselineMode, baseline_fuse
from components.fusion__torch.combiner import Combiner, combine
from components.fusion__torch.head import ClassificationHead, classify
from components.fusion__torch.interaction import InteractionHead, interaction_fuse, interaction_matrix

__all__ = [
    "BASELINE_MODES",
    "BaselineMode",
    "ClassificationHead",
    "Combiner",
    "InteractionHead",
    "baseline_fuse",
    "classify",
    "combine",
    "interaction_fuse",
    "interaction_matrix",
]
