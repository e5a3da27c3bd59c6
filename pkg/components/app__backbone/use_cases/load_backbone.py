from typing import Literal

from bases.platform.config import get_settings
from components.app__backbone.ports import Backbone
from components.backbone__mock.backbone import MockBackbone
from components.backbone__open_clip.backbone import load_open_clip_backbone
from components.domain__encoding.errors import WeightLoadError

BackboneKind = Literal["pretrained", "mock"]


def load_backbone(kind: BackboneKind, source: str | None = None, *, seed: int = 0, device: str = "cpu") -> Backbone:
    if kind == "mock":
        return MockBackbone(seed=seed)
    archive = get_settings().resolve_artifact(source)
    if archive is None:
        raise WeightLoadError("A pretrained backbone needs a weight archive source")
    return load_open_clip_backbone(archive, device=device)
