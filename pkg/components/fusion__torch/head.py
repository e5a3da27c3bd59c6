import torch
from torch import nn

from components.domain__encoding.errors import ShapeError


class ClassificationHead(nn.Module):
    def __init__(self, h: int, dropout: float = 0.1) -> None:
        super().__init__()
        if h < 2:
            raise ShapeError(f"Head width must be at least 2, got {h}")
        self.h = h
        self.mlp = nn.Sequential(nn.Linear(h, h // 2), nn.ReLU(), nn.Dropout(dropout), nn.Linear(h // 2, 1))

    def forward(self, fused: torch.Tensor) -> torch.Tensor:
        if fused.shape[-1] != self.h:
            raise ShapeError(f"Head expects inputs of size {self.h}, got {fused.shape[-1]}")
        return self.mlp(fused).squeeze(-1)


def classify(fused: torch.Tensor, params: ClassificationHead) -> tuple[torch.Tensor, torch.Tensor]:
    """Return (logit, probability)."""
    logit = params(fused)
    return logit, torch.sigmoid(logit)
