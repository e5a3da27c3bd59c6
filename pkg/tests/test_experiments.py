from pathlib import Path

import pytest

from bases.platform.hashing import state_hash
from components.app__experiments.use_cases import (
    ABLATION_GRID,
    evaluate_checkpoint,
    load_run_splits,
    predict_meme,
    run_ablation,
    run_baselines,
    train_pipeline,
)
from components.backbone__mock.backbone import MockBackbone
from components.config__pydantic import build_run_config
from components.data__synthetic import render_synthetic_image
from components.domain__meme.entities import SyntheticImage
from components.domain__meme.errors import DatasetNotFoundError
from components.domain__training.errors import RunConfigError
from components.training__torch import TrainedScorer


def _build_config(n: int, *overrides: str):
    return build_run_config(
        {},
        [
            "seed=0",
            f"data.synthetic_n={n}",
            "train.lr=0.003",
            "train.stage1_epochs=10",
            "train.stage2_epochs=30",
            *overrides,
        ],
    )


def test_synthetic_run_splits() -> None:
    splits = load_run_splits(_build_config(1024))
    assert (len(splits.train), len(splits.selection), len(splits.evaluation)) == (614, 102, 308)
    assert splits.evaluation.name == "test_unseen"
    holdout = load_run_splits(_build_config(1024, "data.selection_split=holdout"))
    assert (len(holdout.train), len(holdout.selection)) == (553, 61)
    assert holdout.selection.name == "holdout"
    assert load_run_splits(_build_config(64, "data.selection_split=none")).selection is None
    with pytest.raises(DatasetNotFoundError):
        load_run_splits(_build_config(64, "data.eval_split=test"))


def test_fusion_separates_confounders_that_unimodal_baselines_cannot() -> None:
    config = _build_config(1024)
    splits = load_run_splits(config)
    backbone = MockBackbone()
    backbone_before = backbone.state_hash()

    result = train_pipeline(config, splits, backbone=backbone)
    report = evaluate_checkpoint(result.full, splits.evaluation, backbone=backbone)
    assert report.accuracy >= 0.90
    assert report.auroc >= 0.95
    assert backbone.state_hash() == backbone_before

    stage1_components = result.stage1.manifest["components"]
    full_components = result.full.manifest["components"]
    assert full_components["visual_proj"]["state_sha256"] == stage1_components["visual_proj"]["state_sha256"]
    assert full_components["phi"]["frozen"]

    rows = {row.method: row for row in run_baselines(config, splits, backbone=backbone)}
    assert list(rows) == ["Text-Only", "Image-Only", "Text + textual inversion", "Sum"]
    assert rows["Text-Only"].accuracy <= 0.60
    assert rows["Image-Only"].accuracy <= 0.60
    assert rows["Sum"].auroc >= rows["Text-Only"].auroc
    assert all(row.config_hash == config.config_hash() for row in rows.values())


def test_pipeline_writes_checkpoints_and_logs(tmp_path: Path) -> None:
    config = _build_config(64, "train.stage1_epochs=1", "train.stage2_epochs=1")
    splits = load_run_splits(config)
    result = train_pipeline(config, splits, out_dir=tmp_path, backbone=MockBackbone())
    assert (tmp_path / "config.json").is_file()
    assert (tmp_path / "stage1" / "manifest.json").is_file()
    assert (tmp_path / "full" / "tensors.bin").is_file()
    assert (tmp_path / "run_log.jsonl").read_text(encoding="utf-8").count("\n") > 0
    assert result.full.config_hash == config.config_hash()


def test_pipeline_stage_selection(tmp_path: Path) -> None:
    config = _build_config(64, "train.stage1_epochs=1", "train.stage2_epochs=1")
    splits = load_run_splits(config)
    backbone = MockBackbone()
    first = train_pipeline(config, splits, backbone=backbone, stage="1")
    assert first.full is None
    second = train_pipeline(config, splits, backbone=backbone, stage="2", stage1=first.stage1)
    assert second.full.stage == "full"
    joint = config.with_flags(use_combiner=True, use_two_stage=False, use_textual_inversion=True)
    with pytest.raises(RunConfigError):
        train_pipeline(joint, splits, backbone=backbone, stage="1")


def test_ablation_grid(tmp_path: Path) -> None:
    config = _build_config(64, "train.stage1_epochs=1", "train.stage2_epochs=1")
    rows = run_ablation(config, load_run_splits(config), backbone=MockBackbone(), out_dir=tmp_path)
    assert [row.method for row in rows] == [method for method, *_ in ABLATION_GRID]
    assert "interaction_head" in rows[0].components
    assert "combiner" not in rows[0].components
    assert "combiner" in rows[1].components and "phi" not in rows[1].components
    assert "phi" in rows[3].components
    assert rows[3].config_hash == config.config_hash()
    assert len({row.config_hash for row in rows}) == 4
    assert sorted(path.name for path in tmp_path.iterdir()) == ["row1", "row2", "row3", "row4"]


def test_predict_meme(tmp_path: Path) -> None:
    config = _build_config(64, "train.stage1_epochs=1", "train.stage2_epochs=1")
    backbone = MockBackbone()
    result = train_pipeline(config, load_run_splits(config), out_dir=tmp_path, backbone=backbone)
    scorer = TrainedScorer.from_path(tmp_path / "full", backbone)
    image = render_synthetic_image(SyntheticImage(image_cue=1, variant_seed=3))
    probability, verdict = predict_meme(scorer, image=image, text="")
    assert 0.0 <= probability <= 1.0
    assert verdict == ("hateful" if probability >= 0.5 else "not-hateful")
    assert predict_meme(scorer, image=image, text="") == (probability, verdict)
    assert state_hash(scorer.model) == state_hash(TrainedScorer(result.full, backbone).model)
