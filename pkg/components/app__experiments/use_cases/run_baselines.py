import logging
from pathlib import Path

from components.app__backbone.ports import Backbone
from components.app__backbone.use_cases.load_backbone import load_backbone
from components.app__experiments.use_cases.load_run_splits import RunSplits
from components.config__pydantic.run_config import RunConfig
from components.domain__evaluation.entities import TableRow
from components.eval__metrics.evaluate import evaluate
from components.fusion__torch.baselines import BASELINE_MODES
from components.training__torch.scoring import TrainedScorer
from components.training__torch.stages import train_baseline

logger = logging.getLogger(__name__)

BASELINE_TITLES = {
    "text_only": "Text-Only",
    "image_only": "Image-Only",
    "text_plus_ti": "Text + textual inversion",
    "sum": "Sum",
}


def run_baselines(
    config: RunConfig,
    splits: RunSplits,
    *,
    backbone: Backbone | None = None,
    out_dir: Path | None = None,
) -> list[TableRow]:
    """One shared-head baseline per feature mode, each trained and evaluated on the same splits."""
    backbone = backbone or load_backbone(
        config.backbone.kind, config.backbone.source, seed=config.backbone.seed, device=config.device
    )
    rows = []
    for mode in BASELINE_MODES:
        checkpoint = train_baseline(
            config,
            splits.train,
            mode,
            backbone=backbone,
            selection=splits.selection,
            out_dir=Path(out_dir) / mode if out_dir is not None else None,
        )
        scorer = TrainedScorer(checkpoint, backbone)
        report = evaluate(scorer, splits.evaluation)
        rows.append(
            TableRow(
                method=BASELINE_TITLES[mode],
                accuracy=report.accuracy,
                auroc=report.auroc,
                config_hash=checkpoint.config_hash,
                components=checkpoint.component_names,
            )
        )
        logger.info("Baseline %s: accuracy=%.4f auroc=%.4f", mode, report.accuracy, report.auroc)
    return rows
