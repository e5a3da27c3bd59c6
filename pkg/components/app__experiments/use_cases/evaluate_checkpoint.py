from components.app__backbone.ports import Backbone
from components.domain__evaluation.entities import MetricsReport
from components.domain__meme.entities import DatasetSplit
from components.domain__training.entities import Checkpoint
from components.eval__metrics.evaluate import evaluate
from components.training__torch.scoring import TrainedScorer


def evaluate_checkpoint(checkpoint: Checkpoint, split: DatasetSplit, *, backbone: Backbone | None = None) -> MetricsReport:
    return evaluate(TrainedScorer(checkpoint, backbone), split)
