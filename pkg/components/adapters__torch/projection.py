from typing import Literal

import torch
from torch import nn

from components.domain__encoding.errors import ShapeError

ProjectionName = Literal["visual_proj", "textual_proj", "phi_proj"]
InitScheme = Literal["identity_padded", "seeded_uniform"]


class Projection(nn.Module):
    """Trainable affine map ``weight @ x + bias`` with its own freeze switch."""

    def __init__(self, name: ProjectionName, p_in: int, p_out: int) -> None:
        super().__init__()
        if p_in <= 0 or p_out <= 0:
            raise ShapeError(f"Projection dims must be positive, got {p_in}->{p_out}")
        self.name = name
        self.p_in = p_in
        self.p_out = p_out
        self.linear = nn.Linear(p_in, p_out)

    @property
    def weight(self) -> torch.Tensor:
        return self.linear.weight

    @property
    def bias(self) -> torch.Tensor:
        return self.linear.bias

    @property
    def frozen(self) -> bool:
        return not any(parameter.requires_grad for parameter in self.parameters())

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        if x.shape[-1] != self.p_in:
            raise ShapeError(f"{self.name} expects inputs of size {self.p_in}, got {x.shape[-1]}")
        return self.linear(x)


def init_projection(
    p_in: int,
    p_out: int,
    scheme: InitScheme,
    seed: int = 0,
    *,
    name: ProjectionName = "visual_proj",
) -> Projection:
    projection = Projection(name, p_in, p_out)
    with torch.no_grad():
        if scheme == "identity_padded":
            projection.linear.weight.copy_(torch.eye(p_out, p_in))
            projection.linear.bias.zero_()
        else:
            generator = torch.Generator().manual_seed(seed)
            bound = 1.0 / p_in**0.5
            projection.linear.weight.copy_(torch.empty(p_out, p_in).uniform_(-bound, bound, generator=generator))
            projection.linear.bias.copy_(torch.empty(p_out).uniform_(-bound, bound, generator=generator))
    return projection


def project(x: torch.Tensor, params: Projection) -> torch.Tensor:
    return params(x)


def set_frozen(params: nn.Module, flag: bool) -> nn.Module:
    """Frozen parameters get no gradients, so the optimizer never moves them."""
    params.requires_grad_(not flag)
    return params
