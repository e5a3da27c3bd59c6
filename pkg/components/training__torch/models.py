from abc import abstractmethod
from dataclasses import asdict, dataclass
from typing import Any, Literal

import torch
from torch import nn

from components.adapters__torch.projection import init_projection
from components.app__backbone.ports import Backbone
from components.domain__encoding.entities import PromptTemplate
from components.domain__fusion.errors import ConfigurationError
from components.domain__training.entities import Provenance
from components.fusion__torch.baselines import BASELINE_MODES, baseline_fuse
from components.fusion__torch.combiner import Combiner
from components.fusion__torch.head import ClassificationHead
from components.fusion__torch.interaction import InteractionHead
from components.inversion__torch.multimodal import PhiPlacement, encode_multimodal_batch
from components.inversion__torch.phi import PhiNetwork
from components.inversion__torch.prompt import prompt_head_ids
from components.training__torch.features import FeatureBatch, TextPath

ModelKind = Literal["stage1", "issues", "baseline"]

VISUAL_PROJ_SEED_OFFSET = 1
TEXTUAL_PROJ_SEED_OFFSET = 2


@dataclass(frozen=True)
class ModelArchitecture:
    kind: ModelKind
    d: int
    w: int
    p: int
    h: int
    interaction_hidden: int = 64
    combiner_dropout: float = 0.1
    head_dropout: float = 0.1
    use_combiner: bool = True
    use_textual_inversion: bool = True
    phi_placement: PhiPlacement = "input"
    baseline_mode: str | None = None
    prompt_prefix: str = "a photo of"
    prompt_separator: str = ", "

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "ModelArchitecture":
        return cls(**payload)

    @property
    def template(self) -> PromptTemplate:
        return PromptTemplate(prefix=self.prompt_prefix, separator=self.prompt_separator)


class FusionModel(nn.Module):
    """Trainable part of a meme classifier; ``forward`` maps a feature batch to logits."""

    def __init__(self, architecture: ModelArchitecture) -> None:
        super().__init__()
        self.architecture = architecture
        self.provenance = Provenance(stage="baseline" if architecture.kind == "baseline" else "full")

    @abstractmethod
    def forward(self, batch: FeatureBatch) -> torch.Tensor:
        raise NotImplementedError

    def components(self) -> dict[str, nn.Module]:
        return dict(self.named_children())

    @property
    def text_path(self) -> TextPath:
        return "raw"

    def trainable_parameters(self) -> list[nn.Parameter]:
        return [parameter for parameter in self.parameters() if parameter.requires_grad]


class Stage1Model(FusionModel):
    """Visual projection pre-training under the interaction-matrix head."""

    def __init__(self, architecture: ModelArchitecture, seed: int = 0) -> None:
        super().__init__(architecture)
        p, d = architecture.p, architecture.d
        self.visual_proj = init_projection(d, p, "seeded_uniform", seed + VISUAL_PROJ_SEED_OFFSET, name="visual_proj")
        self.textual_proj = init_projection(d, p, "seeded_uniform", seed + TEXTUAL_PROJ_SEED_OFFSET, name="textual_proj")
        self.interaction_head = InteractionHead(p, architecture.interaction_hidden, architecture.combiner_dropout)
        self.provenance = Provenance(stage="stage1", carry_forward=["visual_proj"])

    def forward(self, batch: FeatureBatch) -> torch.Tensor:
        return self.interaction_head(self.textual_proj(batch.textual), self.visual_proj(batch.visual))


class MemeClassifier(FusionModel):
    """Projections, optional inversion prompt and fusion assembled per the ablation flags."""

    def __init__(
        self,
        architecture: ModelArchitecture,
        backbone: Backbone | None = None,
        phi: PhiNetwork | None = None,
        seed: int = 0,
    ) -> None:
        super().__init__(architecture)
        arch = architecture
        self.visual_proj = init_projection(arch.d, arch.p, "seeded_uniform", seed + VISUAL_PROJ_SEED_OFFSET, name="visual_proj")
        self.textual_proj = init_projection(arch.d, arch.p, "seeded_uniform", seed + TEXTUAL_PROJ_SEED_OFFSET, name="textual_proj")
        self._backbone = backbone
        self._head_ids: list[int] | None = None
        if arch.use_textual_inversion:
            if backbone is None or phi is None:
                raise ConfigurationError("Textual inversion needs both a backbone and an inversion network")
            if phi.d != arch.d or phi.w != arch.w:
                raise ConfigurationError(f"Inversion network maps {phi.d}->{phi.w}, model expects {arch.d}->{arch.w}")
            width = arch.d if arch.phi_placement == "input" else arch.w
            self.phi_proj = init_projection(width, width, "identity_padded", name="phi_proj")
            self.phi = phi.freeze()
        if arch.use_combiner:
            self.combiner = Combiner(arch.p, arch.h, arch.combiner_dropout)
            self.head = ClassificationHead(arch.h, arch.head_dropout)
        else:
            self.interaction_head = InteractionHead(arch.p, arch.interaction_hidden, arch.combiner_dropout)

    @property
    def backbone(self) -> Backbone | None:
        return self._backbone

    @property
    def text_path(self) -> TextPath:
        return "prompt" if self.architecture.use_textual_inversion else "raw"

    def head_ids(self) -> list[int]:
        if self._head_ids is None:
            self._head_ids = prompt_head_ids(self._backbone, self.architecture.template)
        return self._head_ids

    def textual_features(self, batch: FeatureBatch) -> torch.Tensor:
        if not self.architecture.use_textual_inversion:
            return batch.textual
        return encode_multimodal_batch(
            batch.visual,
            batch.tail_ids,
            self.head_ids(),
            self._backbone,
            self.phi,
            self.phi_proj,
            self.architecture.phi_placement,
        )

    def forward(self, batch: FeatureBatch) -> torch.Tensor:
        text_feat = self.textual_proj(self.textual_features(batch))
        image_feat = self.visual_proj(batch.visual)
        if self.architecture.use_combiner:
            return self.head(self.combiner(text_feat, image_feat))
        return self.interaction_head(text_feat, image_feat)

    def load_visual_proj(self, state: dict[str, torch.Tensor]) -> None:
        self.visual_proj.load_state_dict(state, strict=True)


class BaselineModel(FusionModel):
    """Shared classification head over one of the unimodal or summed feature baselines."""

    def __init__(self, architecture: ModelArchitecture) -> None:
        super().__init__(architecture)
        if architecture.baseline_mode not in BASELINE_MODES:
            raise ConfigurationError(f"Unknown baseline mode {architecture.baseline_mode!r}")
        self.mode = architecture.baseline_mode
        self.head = ClassificationHead(architecture.d, architecture.head_dropout)

    @property
    def text_path(self) -> TextPath:
        return {"image_only": None, "text_plus_ti": "prompt"}.get(self.mode, "raw")

    def forward(self, batch: FeatureBatch) -> torch.Tensor:
        fused = baseline_fuse(self.mode, visual=batch.visual, textual=batch.textual, textual_ti=batch.textual_ti)
        return self.head(fused)


def build_model(
    architecture: ModelArchitecture,
    *,
    backbone: Backbone | None = None,
    phi: PhiNetwork | None = None,
    seed: int = 0,
) -> FusionModel:
    if architecture.kind == "stage1":
        return Stage1Model(architecture, seed=seed)
    if architecture.kind == "baseline":
        return BaselineModel(architecture)
    return MemeClassifier(architecture, backbone=backbone, phi=phi, seed=seed)

