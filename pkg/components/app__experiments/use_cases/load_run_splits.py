import logging
from dataclasses import dataclass

from components.app__experiments.use_cases.load_split import load_split
from components.config__pydantic.run_config import RunConfig
from components.data__jsonl.splits import holdout_split
from components.domain__meme.entities import DatasetSplit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunSplits:
    train: DatasetSplit
    selection: DatasetSplit | None
    evaluation: DatasetSplit


def load_run_splits(config: RunConfig) -> RunSplits:
    """Training, model-selection and evaluation splits as the config names them."""
    train = load_split(config, config.data.train_split)
    selection: DatasetSplit | None = None
    if config.data.selection_split == "holdout":
        train, selection = holdout_split(train, config.data.holdout_fraction, config.seed)
    elif config.data.selection_split == "dev_seen":
        selection = load_split(config, "dev_seen")
    evaluation = load_split(config, config.data.eval_split)
    logger.info(
        "Loaded splits train=%d selection=%s evaluation=%s/%d",
        len(train),
        "none" if selection is None else len(selection),
        evaluation.name,
        len(evaluation),
    )
    return RunSplits(train=train, selection=selection, evaluation=evaluation)
