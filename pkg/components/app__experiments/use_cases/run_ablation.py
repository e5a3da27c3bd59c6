import logging
from pathlib import Path

from components.app__backbone.ports import Backbone
from components.app__backbone.use_cases.load_backbone import load_backbone
from components.app__experiments.use_cases.load_run_splits import RunSplits
from components.app__experiments.use_cases.train_pipeline import train_pipeline
from components.config__pydantic.run_config import RunConfig
from components.domain__evaluation.entities import TableRow
from components.eval__metrics.evaluate import evaluate
from components.training__torch.scoring import TrainedScorer
from components.training__torch.stages import as_bank

logger = logging.getLogger(__name__)

# (method, use_combiner, use_two_stage, use_textual_inversion), toggled in this order
ABLATION_GRID: tuple[tuple[str, bool, bool, bool], ...] = (
    ("Base", False, False, False),
    ("+ Combiner", True, False, False),
    ("+ Combiner + 2-stage", True, True, False),
    ("ISSUES", True, True, True),
)


def run_ablation(
    config: RunConfig,
    splits: RunSplits,
    *,
    backbone: Backbone | None = None,
    out_dir: Path | None = None,
) -> list[TableRow]:
    """Full train + eval cycle per grid row; the first row is the interaction-matrix model."""
    backbone = backbone or load_backbone(
        config.backbone.kind, config.backbone.source, seed=config.backbone.seed, device=config.device
    )
    train_bank = as_bank(splits.train, backbone, config)
    selection_bank = as_bank(splits.selection, backbone, config) if splits.selection is not None else None
    rows = []
    for index, (method, use_combiner, use_two_stage, use_textual_inversion) in enumerate(ABLATION_GRID, start=1):
        row_config = config.with_flags(
            use_combiner=use_combiner,
            use_two_stage=use_two_stage,
            use_textual_inversion=use_textual_inversion,
        )
        result = train_pipeline(
            row_config,
            splits,
            out_dir=Path(out_dir) / f"row{index}" if out_dir is not None else None,
            backbone=backbone,
            train_bank=train_bank,
            selection_bank=selection_bank,
        )
        report = evaluate(TrainedScorer(result.full, backbone), splits.evaluation)
        rows.append(
            TableRow(
                method=method,
                accuracy=report.accuracy,
                auroc=report.auroc,
                config_hash=row_config.config_hash(),
                flags={
                    "use_combiner": use_combiner,
                    "use_two_stage": use_two_stage,
                    "use_textual_inversion": use_textual_inversion,
                },
                components=result.full.component_names,
            )
        )
        logger.info("Ablation row %d (%s): accuracy=%.4f auroc=%.4f", index, method, report.accuracy, report.auroc)
    return rows
