from components.backbone__open_clip.backbone import (
    HAS_OPEN_CLIP,
    OpenClipBackbone,
    convert_clip_weights,
    load_open_clip_backbone,
)

__all__ = ["HAS_OPEN_CLIP", "OpenClipBackbone", "convert_clip_weights", "load_open_clip_backbone"]
