from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bases.platform.config import get_settings
from bases.platform.hashing import sha256_json
from components.domain__training.errors import RunConfigError

SplitName = Literal["train", "dev_seen", "test_unseen", "test"]
SelectionSplit = Literal["dev_seen", "holdout", "none"]

DEFAULT_EVAL_SPLIT: dict[str, SplitName] = {"hmc": "test_unseen", "harmeme": "test", "synthetic": "test_unseen"}
DEFAULT_SELECTION: dict[str, SelectionSplit] = {"hmc": "dev_seen", "harmeme": "holdout", "synthetic": "dev_seen"}


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class BackboneSettings(_Section):
    kind: Literal["pretrained", "mock"] = "mock"
    source: str | None = None
    seed: int = 0


class PhiSettings(_Section):
    kind: Literal["stub", "pretrained"] = "stub"
    source: str | None = None
    stub_scheme: Literal["auto", "identity", "seeded", "zero"] = "auto"
    placement: Literal["input", "output"] = "input"


class DataSettings(_Section):
    source: Literal["hmc", "harmeme", "synthetic"] = "synthetic"
    root: str | None = None
    synthetic_n: int = Field(default=1024, ge=4)
    synthetic_seed: int = 0
    train_split: SplitName = "train"
    eval_split: SplitName | None = None
    selection_split: SelectionSplit | None = None
    holdout_fraction: float = Field(default=0.1, gt=0.0, lt=1.0)


class ModelSettings(_Section):
    projection_dim: int | None = Field(default=None, ge=1)
    combiner_dim: int | None = Field(default=None, ge=2)
    interaction_hidden: int = Field(default=64, ge=1)
    combiner_dropout: float = Field(default=0.1, ge=0.0, lt=1.0)
    head_dropout: float = Field(default=0.1, ge=0.0, lt=1.0)


class TrainSettings(_Section):
    stage1_epochs: int = Field(default=10, ge=1)
    stage2_epochs: int = Field(default=20, ge=1)
    batch_size: int | None = Field(default=None, ge=1)
    lr: float = Field(default=1e-4, gt=0.0)
    weight_decay: float = Field(default=1e-4, ge=0.0)
    grad_clip: float = Field(default=1.0, gt=0.0)
    finetune_visual_proj: bool = False


class AblationFlags(_Section):
    use_combiner: bool = True
    use_two_stage: bool = True
    use_textual_inversion: bool = True


class PromptSettings(_Section):
    prefix: str = Field(default="a photo of", min_length=1)
    separator: str = ", "


class RunConfig(_Section):
    seed: int = Field(default_factory=lambda: get_settings().seed)
    device: str = "cpu"
    backbone: BackboneSettings = Field(default_factory=BackboneSettings)
    phi: PhiSettings = Field(default_factory=PhiSettings)
    data: DataSettings = Field(default_factory=DataSettings)
    model: ModelSettings = Field(default_factory=ModelSettings)
    train: TrainSettings = Field(default_factory=TrainSettings)
    ablation: AblationFlags = Field(default_factory=AblationFlags)
    prompt: PromptSettings = Field(default_factory=PromptSettings)

    @model_validator(mode="after")
    def _resolve_defaults(self) -> "RunConfig":
        pretrained = self.backbone.kind == "pretrained"
        if self.model.projection_dim is None:
            self.model.projection_dim = 1024 if pretrained else 16
        if self.model.combiner_dim is None:
            self.model.combiner_dim = self.model.projection_dim
        if self.train.batch_size is None:
            self.train.batch_size = 64 if pretrained else 16
        if self.data.eval_split is None:
            self.data.eval_split = DEFAULT_EVAL_SPLIT[self.data.source]
        if self.data.selection_split is None:
            self.data.selection_split = DEFAULT_SELECTION[self.data.source]
        return self

    def to_dict(self) -> dict:
        return self.model_dump(mode="json")

    def config_hash(self) -> str:
        return sha256_json(self.to_dict())

    def with_flags(self, *, use_combiner: bool, use_two_stage: bool, use_textual_inversion: bool) -> "RunConfig":
        payload = self.to_dict()
        payload["ablation"] = {
            "use_combiner": use_combiner,
            "use_two_stage": use_two_stage,
            "use_textual_inversion": use_textual_inversion,
        }
        return RunConfig.model_validate(payload)

    def validate_paths(self) -> None:
        settings = get_settings()
        if self.data.source != "synthetic":
            if self.data.root is None:
                raise RunConfigError(f"data.root: required for data.source={self.data.source}")
            if not Path(self.data.root).is_dir():
                raise RunConfigError(f"data.root: path {self.data.root} does not exist")
        for key, section in (("backbone.source", self.backbone), ("phi.source", self.phi)):
            if section.kind != "pretrained":
                continue
            resolved = settings.resolve_artifact(section.source)
            if resolved is None or not resolved.exists():
                raise RunConfigError(f"{key}: weight archive {section.source} does not exist")
