from pathlib import Path
from typing import Literal

import torch
from torch import nn

from bases.platform.tensor_archive import TensorArchiveError, read_archive, write_archive
from components.domain__encoding.entities import FeatureVector, PseudoToken
from components.domain__encoding.errors import ShapeError, WeightLoadError

StubScheme = Literal["auto", "identity", "seeded", "zero"]
SEARLE_HIDDEN = 3072


class PhiNetwork(nn.Module):
    """Frozen map from visual features (R^d) to a pseudo-word token (R^w)."""

    def __init__(self, layers: nn.Sequential, d: int, w: int, variant: str) -> None:
        super().__init__()
        self.layers = layers
        self.d = d
        self.w = w
        self.variant = variant

    @classmethod
    def searle(cls, d: int, w: int, hidden: int = SEARLE_HIDDEN, dropout: float = 0.5) -> "PhiNetwork":
        layers = nn.Sequential(
            nn.Linear(d, hidden),
            nn.GELU(),
            nn.Dropout(dropout),
            nn.Linear(hidden, hidden),
            nn.GELU(),
            nn.Dropout(dropout),
            nn.Linear(hidden, w),
        )
        return cls(layers, d, w, variant="searle")

    @classmethod
    def stub(cls, d: int, w: int, scheme: StubScheme = "auto", seed: int = 0) -> "PhiNetwork":
        linear = nn.Linear(d, w, bias=False)
        if scheme == "auto":
            scheme = "identity" if d == w else "seeded"
        with torch.no_grad():
            if scheme == "identity":
                linear.weight.copy_(torch.eye(w, d))
            elif scheme == "zero":
                linear.weight.zero_()
            else:
                generator = torch.Generator().manual_seed(seed)
                linear.weight.copy_(torch.randn(w, d, generator=generator) / d**0.5)
        return cls(nn.Sequential(linear), d, w, variant=f"stub-{scheme}").freeze()

    @property
    def frozen(self) -> bool:
        return not any(parameter.requires_grad for parameter in self.parameters())

    def freeze(self) -> "PhiNetwork":
        self.requires_grad_(False)
        return self.eval()

    def train(self, mode: bool = True) -> "PhiNetwork":
        return super().train(mode and not self.frozen)

    def forward(self, visual: torch.Tensor) -> torch.Tensor:
        if visual.shape[-1] != self.d:
            raise ShapeError(f"phi expects visual features of size {self.d}, got {visual.shape[-1]}")
        return self.layers(visual)


def invert(visual: FeatureVector | torch.Tensor, phi: PhiNetwork) -> PseudoToken:
    values = visual.values if isinstance(visual, FeatureVector) else visual
    return PseudoToken(values=phi(values))


def load_phi(archive_dir: Path) -> PhiNetwork:
    try:
        archive = read_archive(archive_dir)
    except TensorArchiveError as exc:
        raise WeightLoadError(f"Cannot load inversion weights from {archive_dir}: {exc}") from exc
    meta = archive.metadata
    d, w = int(meta.get("d", 0)), int(meta.get("w", 0))
    if meta.get("variant") == "searle":
        phi = PhiNetwork.searle(d, w, hidden=int(meta.get("hidden", SEARLE_HIDDEN)))
    else:
        phi = PhiNetwork.stub(d, w, scheme="zero")
    expected, provided = set(phi.state_dict()), set(archive.tensors)
    if expected != provided:
        raise WeightLoadError(
            f"Archive {archive_dir} does not match phi layout: "
            f"missing={sorted(expected - provided)} unexpected={sorted(provided - expected)}"
        )
    phi.load_state_dict(archive.tensors, strict=True)
    return phi.freeze()


def convert_phi_weights(source: Path, out_dir: Path) -> Path:
    """Write a released inversion-network state dict (``layers.*`` keys) as a tensor archive."""
    try:
        payload = torch.load(Path(source), map_location="cpu", weights_only=True)
    except Exception as exc:  # torch.load surfaces zip, pickle and EOF errors
        raise WeightLoadError(f"Cannot read inversion weights {source}: {exc}") from exc
    if isinstance(payload, dict) and isinstance(payload.get("Phi"), dict):
        payload = payload["Phi"]
    if not isinstance(payload, dict) or "layers.0.weight" not in payload or "layers.6.weight" not in payload:
        raise WeightLoadError(f"{source} is not an inversion-network state dict")
    state = {name: tensor.float() for name, tensor in payload.items() if name.startswith("layers.")}
    hidden, d = state["layers.0.weight"].shape
    w = state["layers.6.weight"].shape[0]
    metadata = {"kind": "phi", "variant": "searle", "d": int(d), "w": int(w), "hidden": int(hidden), "source": str(source)}
    return write_archive(out_dir, state, metadata)
