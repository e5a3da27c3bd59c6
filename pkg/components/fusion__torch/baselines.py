from typing import Literal

import torch

from components.domain__fusion.errors import ConfigurationError

BaselineMode = Literal["text_only", "image_only", "text_plus_ti", "sum"]
BASELINE_MODES: tuple[BaselineMode, ...] = ("text_only", "image_only", "text_plus_ti", "sum")
REQUIRED_INPUTS: dict[str, tuple[str, ...]] = {
    "text_only": ("textual",),
    "image_only": ("visual",),
    "text_plus_ti": ("textual_ti",),
    "sum": ("visual", "textual"),
}


def baseline_fuse(
    mode: BaselineMode,
    *,
    visual: torch.Tensor | None = None,
    textual: torch.Tensor | None = None,
    textual_ti: torch.Tensor | None = None,
) -> torch.Tensor:
    available = {"visual": visual, "textual": textual, "textual_ti": textual_ti}
    if mode not in REQUIRED_INPUTS:
        raise ConfigurationError(f"Unknown baseline mode {mode!r}")
    missing = [name for name in REQUIRED_INPUTS[mode] if available[name] is None]
    if missing:
        raise ConfigurationError(f"Baseline {mode} needs {', '.join(missing)} features")
    if mode == "text_only":
        return textual
    if mode == "image_only":
        return visual
    if mode == "text_plus_ti":
        return textual_ti
    return visual + textual
