from collections.abc import Sequence

import numpy as np
from scipy.stats import rankdata

from components.domain__evaluation.entities import RocPoint
from components.domain__evaluation.errors import EmptyInputError, UndefinedMetricError


def _as_arrays(scores: Sequence[float], labels: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    if len(scores) == 0:
        raise EmptyInputError("Metrics need at least one score")
    if len(scores) != len(labels):
        raise EmptyInputError(f"Got {len(scores)} scores but {len(labels)} labels")
    label_array = np.asarray(labels, dtype=np.int64)
    if not np.isin(label_array, (0, 1)).all():
        raise UndefinedMetricError("Labels must be 0 or 1")
    return np.asarray(scores, dtype=np.float64), label_array


def accuracy(scores: Sequence[float], labels: Sequence[int], threshold: float = 0.5) -> float:
    """Fraction of samples where (score >= threshold) equals the label."""
    score_array, label_array = _as_arrays(scores, labels)
    predictions = (score_array >= threshold).astype(np.int64)
    return float(np.mean(predictions == label_array))


def auroc(scores: Sequence[float], labels: Sequence[int]) -> float:
    """Mann-Whitney estimate from midranks; tied positive/negative pairs count one half."""
    score_array, label_array = _as_arrays(scores, labels)
    positives = int(label_array.sum())
    negatives = len(label_array) - positives
    if positives == 0 or negatives == 0:
        raise UndefinedMetricError("AUROC needs at least one positive and one negative label")
    ranks = rankdata(score_array, method="average")
    u_statistic = ranks[label_array == 1].sum() - positives * (positives + 1) / 2.0
    return float(u_statistic / (positives * negatives))


def roc_curve(scores: Sequence[float], labels: Sequence[int]) -> list[RocPoint]:
    """One point per distinct score, from (0, 0) to (1, 1); tied scores move diagonally."""
    score_array, label_array = _as_arrays(scores, labels)
    positives = int(label_array.sum())
    negatives = len(label_array) - positives
    if positives == 0 or negatives == 0:
        raise UndefinedMetricError("ROC curve needs at least one positive and one negative label")
    order = np.argsort(-score_array, kind="stable")
    sorted_scores, sorted_labels = score_array[order], label_array[order]
    distinct = np.flatnonzero(np.diff(sorted_scores)) if len(sorted_scores) > 1 else np.array([], dtype=np.int64)
    cuts = np.append(distinct, len(sorted_scores) - 1)
    true_positives = np.cumsum(sorted_labels)[cuts]
    false_positives = (cuts + 1) - true_positives
    points = [RocPoint(fpr=0.0, tpr=0.0)]
    points.extend(
        RocPoint(fpr=float(fp / negatives), tpr=float(tp / positives))
        for fp, tp in zip(false_positives, true_positives, strict=True)
    )
    return points


def trapezoid_area(points: Sequence[RocPoint]) -> float:
    area = 0.0
    for left, right in zip(points, points[1:]):
        area += (right.fpr - left.fpr) * (left.tpr + right.tpr) / 2.0
    return area
