import torch
from torch import nn

from components.domain__encoding.errors import ShapeError


def interaction_matrix(image_feat: torch.Tensor, text_feat: torch.Tensor) -> torch.Tensor:
    """Row-major flattening of outer(image, text): entry [i, j] = image[i] * text[j]."""
    return torch.einsum("...i,...j->...ij", image_feat, text_feat).flatten(start_dim=-2)


class InteractionHead(nn.Module):
    """Classifier over the flattened p x p cross-modal interaction matrix."""

    def __init__(self, p: int, hidden: int = 64, dropout: float = 0.1) -> None:
        super().__init__()
        self.p = p
        self.input_dim = p * p
        self.mlp = nn.Sequential(nn.Linear(self.input_dim, hidden), nn.ReLU(), nn.Dropout(dropout), nn.Linear(hidden, 1))

    def forward(self, text_feat: torch.Tensor, image_feat: torch.Tensor) -> torch.Tensor:
        if text_feat.shape[-1] != self.p or image_feat.shape[-1] != self.p:
            raise ShapeError(f"Interaction head expects inputs of size {self.p}, got {text_feat.shape[-1]} and {image_feat.shape[-1]}")
        return self.mlp(interaction_matrix(image_feat, text_feat)).squeeze(-1)


def interaction_fuse(text_feat: torch.Tensor, image_feat: torch.Tensor, params: InteractionHead) -> torch.Tensor:
    return params(text_feat, image_feat)
