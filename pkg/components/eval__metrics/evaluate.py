import logging

from components.app__evaluation.ports import MemeScorer
from components.domain__evaluation.entities import MetricsReport, SampleScore
from components.domain__evaluation.errors import EmptyInputError, UnlabeledSplitError
from components.domain__meme.entities import DatasetSplit
from components.eval__metrics.metrics import accuracy, auroc, roc_curve

logger = logging.getLogger(__name__)

THRESHOLD = 0.5


def evaluate(scorer: MemeScorer, split: DatasetSplit) -> MetricsReport:
    if len(split) == 0:
        raise EmptyInputError(f"Split {split.name} is empty")
    if not split.is_labeled:
        raise UnlabeledSplitError(f"Split {split.name} has unlabeled records; use predict to score it")
    scores = scorer.score(split.records)
    labels = split.labels
    records = [
        SampleScore(id=record.id, score=score, label=label, prediction=int(score >= THRESHOLD))
        for record, score, label in zip(split.records, scores, labels, strict=True)
    ]
    report = MetricsReport(
        split=split.name,
        n=len(records),
        accuracy=accuracy(scores, labels, THRESHOLD),
        auroc=auroc(scores, labels),
        records=records,
        config_hash=scorer.config_hash,
        roc_points=roc_curve(scores, labels),
        notes=list(scorer.notes),
    )
    logger.info("Evaluated %s: n=%d accuracy=%.4f auroc=%.4f", split.name, report.n, report.accuracy, report.auroc)
    return report
