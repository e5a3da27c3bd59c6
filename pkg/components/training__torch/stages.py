import logging
from pathlib import Path
from typing import Any

import torch

from bases.platform.config import get_settings
from bases.platform.seeding import seed_everything
from components.adapters__torch.projection import set_frozen
from components.app__backbone.ports import Backbone
from components.config__pydantic.run_config import RunConfig
from components.domain__encoding.entities import PromptTemplate
from components.domain__meme.entities import DatasetSplit
from components.domain__training.entities import Checkpoint, MetricEntry, Provenance, TrainingStage
from components.domain__training.errors import CompatibilityError, RunConfigError
from components.fusion__torch.baselines import BaselineMode
from components.inversion__torch.phi import PhiNetwork, load_phi
from components.training__torch.checkpoint import checkpoint_from_model, provenance_from_manifest, write_checkpoint
from components.training__torch.features import FeatureBank
from components.training__torch.loop import fit
from components.training__torch.models import (
    BaselineModel,
    FusionModel,
    MemeClassifier,
    ModelArchitecture,
    ModelKind,
    Stage1Model,
)
from components.training__torch.run_log import RunLog

logger = logging.getLogger(__name__)

SplitOrBank = DatasetSplit | FeatureBank


def prompt_template(config: RunConfig) -> PromptTemplate:
    return PromptTemplate(prefix=config.prompt.prefix, separator=config.prompt.separator)


def architecture_for(
    config: RunConfig,
    backbone: Backbone,
    kind: ModelKind,
    baseline_mode: BaselineMode | None = None,
) -> ModelArchitecture:
    return ModelArchitecture(
        kind=kind,
        d=backbone.meta.d,
        w=backbone.meta.w,
        p=config.model.projection_dim,
        h=config.model.combiner_dim,
        interaction_hidden=config.model.interaction_hidden,
        combiner_dropout=config.model.combiner_dropout,
        head_dropout=config.model.head_dropout,
        use_combiner=config.ablation.use_combiner,
        use_textual_inversion=config.ablation.use_textual_inversion and kind == "issues",
        phi_placement=config.phi.placement,
        baseline_mode=baseline_mode,
        prompt_prefix=config.prompt.prefix,
        prompt_separator=config.prompt.separator,
    )


def build_phi(config: RunConfig, backbone: Backbone) -> PhiNetwork:
    if config.phi.kind == "pretrained":
        archive = get_settings().resolve_artifact(config.phi.source)
        if archive is None:
            raise RunConfigError("phi.source: required when phi.kind=pretrained")
        phi = load_phi(archive)
    else:
        phi = PhiNetwork.stub(backbone.meta.d, backbone.meta.w, scheme=config.phi.stub_scheme, seed=config.seed)
    if (phi.d, phi.w) != (backbone.meta.d, backbone.meta.w):
        raise CompatibilityError(f"Inversion network maps {phi.d}->{phi.w}, backbone has d={backbone.meta.d} w={backbone.meta.w}")
    return phi


def backbone_reference(config: RunConfig, backbone: Backbone) -> dict[str, Any]:
    return {
        "kind": config.backbone.kind,
        "source": config.backbone.source,
        "seed": config.backbone.seed,
        "name": backbone.meta.name,
        "state_sha256": backbone.state_hash(),
    }


def as_bank(
    data: SplitOrBank,
    backbone: Backbone,
    config: RunConfig,
    phi: PhiNetwork | None = None,
) -> FeatureBank:
    if isinstance(data, FeatureBank):
        return data
    return FeatureBank.build(data, backbone, prompt_template(config), phi=phi)


def _fit(
    model: FusionModel,
    config: RunConfig,
    train_bank: FeatureBank,
    selection_bank: FeatureBank | None,
    *,
    stage: TrainingStage,
    epochs: int,
    generator: torch.Generator,
    run_log: RunLog | None,
) -> list[MetricEntry]:
    return fit(
        model,
        train_bank,
        stage=stage,
        epochs=epochs,
        batch_size=config.train.batch_size,
        lr=config.train.lr,
        weight_decay=config.train.weight_decay,
        grad_clip=config.train.grad_clip,
        generator=generator,
        selection_bank=selection_bank,
        run_log=run_log,
    )


def _finish(
    model: FusionModel,
    config: RunConfig,
    backbone: Backbone,
    banks: list[FeatureBank | None],
    history: list[MetricEntry],
    out_dir: Path | None,
) -> Checkpoint:
    model.provenance = Provenance(
        stage=model.provenance.stage,
        config=config.to_dict(),
        config_hash=config.config_hash(),
        backbone=backbone_reference(config, backbone),
        metric_history=history,
        run_stats={"truncations": sum(bank.truncations_for(model.text_path) for bank in banks if bank is not None)},
        carry_forward=model.provenance.carry_forward,
    )
    checkpoint = checkpoint_from_model(model)
    if out_dir is not None:
        write_checkpoint(checkpoint, out_dir)
    return checkpoint


def train_stage1(
    config: RunConfig,
    train: SplitOrBank,
    *,
    backbone: Backbone,
    selection: SplitOrBank | None = None,
    run_log: RunLog | None = None,
    out_dir: Path | None = None,
) -> Checkpoint:
    """Pre-train visual_proj under the interaction head; only visual_proj is carried forward."""
    generator = seed_everything(config.seed)
    train_bank = as_bank(train, backbone, config)
    selection_bank = as_bank(selection, backbone, config) if selection is not None else None
    model = Stage1Model(architecture_for(config, backbone, "stage1"), seed=config.seed)
    history = _fit(
        model,
        config,
        train_bank,
        selection_bank,
        stage="stage1",
        epochs=config.train.stage1_epochs,
        generator=generator,
        run_log=run_log,
    )
    return _finish(model, config, backbone, [train_bank, selection_bank], history, out_dir)


def check_stage1_compatible(config: RunConfig, backbone: Backbone, stage1: Checkpoint) -> None:
    manifest = stage1.manifest
    if stage1.stage != "stage1" or "visual_proj" not in manifest.get("carry_forward", []):
        raise CompatibilityError(f"Checkpoint stage {stage1.stage!r} does not carry a pre-trained visual_proj")
    architecture = manifest["architecture"]
    expected = {"d": backbone.meta.d, "p": config.model.projection_dim}
    found = {key: architecture.get(key) for key in expected}
    if found != expected:
        raise CompatibilityError(f"Stage-1 checkpoint dims {found} do not match the run {expected}")
    recorded = manifest.get("config", {}).get("backbone")
    if recorded is not None and recorded != config.backbone.model_dump(mode="json"):
        raise CompatibilityError(f"Stage-1 checkpoint used backbone {recorded}, run config has {config.backbone.model_dump(mode='json')}")
    expected_hash = manifest.get("backbone", {}).get("state_sha256")
    if expected_hash and expected_hash != backbone.state_hash():
        raise CompatibilityError("Stage-1 checkpoint was trained against a different backbone state")


def train_stage2(
    config: RunConfig,
    train: SplitOrBank,
    stage1: Checkpoint | None,
    *,
    backbone: Backbone,
    selection: SplitOrBank | None = None,
    run_log: RunLog | None = None,
    out_dir: Path | None = None,
) -> Checkpoint:
    """Train the fusion model; with two-stage training off this is the single joint stage."""
    generator = seed_everything(config.seed)
    two_stage = config.ablation.use_two_stage
    if two_stage:
        if stage1 is None:
            raise CompatibilityError("Two-stage training needs a stage-1 checkpoint")
        check_stage1_compatible(config, backbone, stage1)
    elif stage1 is not None:
        logger.warning("Ignoring stage-1 checkpoint: two-stage training is off")
    architecture = architecture_for(config, backbone, "issues")
    phi = build_phi(config, backbone) if architecture.use_textual_inversion else None
    train_bank = as_bank(train, backbone, config)
    selection_bank = as_bank(selection, backbone, config) if selection is not None else None
    model = MemeClassifier(architecture, backbone=backbone, phi=phi, seed=config.seed)
    history: list[MetricEntry] = []
    if two_stage:
        model.load_visual_proj(stage1.component_state("visual_proj"))
        set_frozen(model.visual_proj, not config.train.finetune_visual_proj)
        history.extend(provenance_from_manifest(stage1.manifest).metric_history)
    history += _fit(
        model,
        config,
        train_bank,
        selection_bank,
        stage="stage2",
        epochs=config.train.stage2_epochs,
        generator=generator,
        run_log=run_log,
    )
    return _finish(model, config, backbone, [train_bank, selection_bank], history, out_dir)


def train_baseline(
    config: RunConfig,
    train: SplitOrBank,
    mode: BaselineMode,
    *,
    backbone: Backbone,
    selection: SplitOrBank | None = None,
    run_log: RunLog | None = None,
    out_dir: Path | None = None,
) -> Checkpoint:
    """Train the shared head on one baseline feature; same optimizer and epochs as stage 2."""
    generator = seed_everything(config.seed)
    phi = build_phi(config, backbone) if mode == "text_plus_ti" else None
    train_bank = as_bank(train, backbone, config, phi)
    selection_bank = as_bank(selection, backbone, config, phi) if selection is not None else None
    model = BaselineModel(architecture_for(config, backbone, "baseline", baseline_mode=mode))
    history = _fit(
        model,
        config,
        train_bank,
        selection_bank,
        stage="baseline",
        epochs=config.train.stage2_epochs,
        generator=generator,
        run_log=run_log,
    )
    return _finish(model, config, backbone, [train_bank, selection_bank], history, out_dir)


def build_phi_for_checkpoint(checkpoint: Checkpoint, backbone: Backbone) -> PhiNetwork | None:
    """Inversion network for a text_plus_ti baseline, whose features are computed outside the model."""
    if checkpoint.manifest["architecture"].get("baseline_mode") != "text_plus_ti":
        return None
    return build_phi(RunConfig.model_validate(checkpoint.manifest["config"]), backbone)
