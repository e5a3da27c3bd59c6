import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from components.app__backbone.ports import Backbone
from components.app__backbone.use_cases.load_backbone import load_backbone
from components.app__experiments.use_cases.load_run_splits import RunSplits
from components.config__pydantic.run_config import RunConfig
from components.domain__training.entities import Checkpoint
from components.domain__training.errors import RunConfigError
from components.training__torch.features import FeatureBank
from components.training__torch.run_log import RunLog
from components.training__torch.stages import as_bank, train_stage1, train_stage2

logger = logging.getLogger(__name__)

StageSelection = Literal["1", "2", "all"]
STAGE1_DIR = "stage1"
FULL_DIR = "full"
RUN_LOG_NAME = "run_log.jsonl"
CONFIG_NAME = "config.json"


@dataclass
class PipelineResult:
    stage1: Checkpoint | None
    full: Checkpoint | None


def train_pipeline(
    config: RunConfig,
    splits: RunSplits,
    *,
    out_dir: Path | None = None,
    backbone: Backbone | None = None,
    stage: StageSelection = "all",
    stage1: Checkpoint | None = None,
    train_bank: FeatureBank | None = None,
    selection_bank: FeatureBank | None = None,
) -> PipelineResult:
    """Stage 1 then stage 2, or one joint stage when two-stage training is off."""
    backbone = backbone or load_backbone(
        config.backbone.kind, config.backbone.source, seed=config.backbone.seed, device=config.device
    )
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / CONFIG_NAME).write_text(json.dumps(config.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    train = train_bank or as_bank(splits.train, backbone, config)
    selection = selection_bank
    if selection is None and splits.selection is not None:
        selection = as_bank(splits.selection, backbone, config)
    two_stage = config.ablation.use_two_stage
    result = PipelineResult(stage1=stage1, full=None)
    with RunLog(out_dir / RUN_LOG_NAME if out_dir is not None else None) as run_log:
        if two_stage and stage in ("1", "all"):
            result.stage1 = train_stage1(
                config,
                train,
                backbone=backbone,
                selection=selection,
                run_log=run_log,
                out_dir=out_dir / STAGE1_DIR if out_dir is not None else None,
            )
        elif stage == "1":
            raise RunConfigError("ablation.use_two_stage: stage 1 was requested but two-stage training is off")
        if stage in ("2", "all"):
            result.full = train_stage2(
                config,
                train,
                result.stage1 if two_stage else None,
                backbone=backbone,
                selection=selection,
                run_log=run_log,
                out_dir=out_dir / FULL_DIR if out_dir is not None else None,
            )
    return result
