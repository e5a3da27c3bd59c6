import copy
import logging
import math

import torch
from torch.nn.utils import clip_grad_norm_

from components.domain__evaluation.errors import UndefinedMetricError
from components.domain__training.entities import MetricEntry, TrainingStage
from components.domain__training.errors import TrainingAbortedError, TrainingError
from components.eval__metrics.metrics import accuracy, auroc
from components.training__torch.features import FeatureBank, FeatureBatch
from components.training__torch.losses import bce_loss
from components.training__torch.models import FusionModel
from components.training__torch.run_log import RunLog

logger = logging.getLogger(__name__)


def build_optimizer(model: FusionModel, *, lr: float, weight_decay: float) -> torch.optim.AdamW | None:
    """AdamW over unfrozen parameters only; ``None`` when everything is frozen."""
    parameters = model.trainable_parameters()
    if not parameters:
        return None
    return torch.optim.AdamW(parameters, lr=lr, weight_decay=weight_decay)


def train_step(
    batch: FeatureBatch,
    model: FusionModel,
    optimizer: torch.optim.Optimizer | None,
    *,
    grad_clip: float = 1.0,
) -> float:
    if len(batch) == 0 or batch.labels is None:
        raise TrainingError("train_step needs a nonempty labeled batch")
    model.train()
    prob = torch.sigmoid(model(batch))
    loss = bce_loss(prob, batch.labels)
    if not torch.isfinite(loss):
        raise TrainingAbortedError(f"Non-finite loss {loss.item()} on batch starting with {batch.ids[0]}")
    if optimizer is None or not loss.requires_grad:
        return float(loss.item())
    optimizer.zero_grad(set_to_none=True)
    loss.backward()
    clip_grad_norm_(model.trainable_parameters(), grad_clip)
    optimizer.step()
    return float(loss.item())


def score_bank(model: FusionModel, bank: FeatureBank, batch_size: int = 256) -> torch.Tensor:
    """Probabilities in record order, dropout off."""
    was_training = model.training
    model.eval()
    try:
        with torch.no_grad():
            scores = [torch.sigmoid(model(batch)) for batch in bank.batches(batch_size)]
    finally:
        model.train(was_training)
    return torch.cat(scores)


def _select_metrics(model: FusionModel, bank: FeatureBank, batch_size: int) -> tuple[float | None, float | None]:
    scores = score_bank(model, bank, batch_size).tolist()
    labels = [int(label) for label in bank.labels.tolist()]
    try:
        return auroc(scores, labels), accuracy(scores, labels)
    except UndefinedMetricError:
        return None, accuracy(scores, labels)


def fit(
    model: FusionModel,
    train_bank: FeatureBank,
    *,
    stage: TrainingStage,
    epochs: int,
    batch_size: int,
    lr: float,
    weight_decay: float,
    grad_clip: float,
    generator: torch.Generator,
    selection_bank: FeatureBank | None = None,
    run_log: RunLog | None = None,
) -> list[MetricEntry]:
    """Train for ``epochs`` epochs, keeping the weights with the best selection AUROC."""
    if not train_bank.is_labeled:
        raise TrainingError(f"Training split {train_bank.name!r} has unlabeled records")
    optimizer = build_optimizer(model, lr=lr, weight_decay=weight_decay)
    history: list[MetricEntry] = []
    best_auroc = -math.inf
    best_state: dict[str, torch.Tensor] | None = None
    step = 0
    for epoch in range(1, epochs + 1):
        losses = []
        for batch in train_bank.batches(batch_size, generator):
            loss = train_step(batch, model, optimizer, grad_clip=grad_clip)
            step += 1
            losses.append(loss)
            if run_log is not None:
                run_log.record(step=step, stage=stage, loss=loss, lr=lr)
        entry = MetricEntry(stage=stage, epoch=epoch, step=step, train_loss=sum(losses) / len(losses))
        if selection_bank is not None and selection_bank.is_labeled:
            entry.selection_auroc, entry.selection_accuracy = _select_metrics(model, selection_bank, batch_size)
            if entry.selection_auroc is not None and entry.selection_auroc > best_auroc:
                best_auroc = entry.selection_auroc
                best_state = copy.deepcopy(model.state_dict())
        history.append(entry)
        logger.info(
            "%s epoch %d/%d loss=%.6f selection_auroc=%s",
            stage,
            epoch,
            epochs,
            entry.train_loss,
            "n/a" if entry.selection_auroc is None else f"{entry.selection_auroc:.4f}",
        )
    if best_state is not None:
        model.load_state_dict(best_state)
        logger.info("%s restored epoch with selection AUROC %.4f", stage, best_auroc)
    return history
