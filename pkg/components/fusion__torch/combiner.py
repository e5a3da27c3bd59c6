import torch
from torch import nn

from components.domain__encoding.errors import ShapeError


class Combiner(nn.Module):
    """Gated convex mixture of the two projected branches plus a learned residual.

    output = lam * B_t(t) + (1 - lam) * B_i(v) + residual([B_t(t), B_i(v)]),
    lam = sigmoid(gate([B_t(t), B_i(v)])).
    """

    def __init__(self, p: int, h: int | None = None, dropout: float = 0.1) -> None:
        super().__init__()
        h = h or p
        self.p = p
        self.h = h
        self.text_branch = nn.Sequential(nn.Linear(p, h), nn.ReLU(), nn.Dropout(dropout))
        self.image_branch = nn.Sequential(nn.Linear(p, h), nn.ReLU(), nn.Dropout(dropout))
        self.gate = nn.Sequential(nn.Linear(2 * h, h), nn.ReLU(), nn.Dropout(dropout), nn.Linear(h, 1))
        self.residual = nn.Sequential(nn.Linear(2 * h, h), nn.ReLU(), nn.Dropout(dropout), nn.Linear(h, h))

    def mixing_weight(self, text_feat: torch.Tensor, image_feat: torch.Tensor) -> torch.Tensor:
        return self._forward(text_feat, image_feat)[1]

    def _forward(self, text_feat: torch.Tensor, image_feat: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        if text_feat.shape[-1] != self.p or image_feat.shape[-1] != self.p:
            raise ShapeError(f"Combiner expects inputs of size {self.p}, got {text_feat.shape[-1]} and {image_feat.shape[-1]}")
        text_branch = self.text_branch(text_feat)
        image_branch = self.image_branch(image_feat)
        joint = torch.cat([text_branch, image_branch], dim=-1)
        lam = torch.sigmoid(self.gate(joint))
        return lam * text_branch + (1 - lam) * image_branch + self.residual(joint), lam

    def forward(self, text_feat: torch.Tensor, image_feat: torch.Tensor) -> torch.Tensor:
        return self._forward(text_feat, image_feat)[0]


def combine(text_feat: torch.Tensor, image_feat: torch.Tensor, params: Combiner) -> torch.Tensor:
    return params(text_feat, image_feat)
