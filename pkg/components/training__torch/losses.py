import torch

BCE_EPS = 1e-7


def bce_loss(prob: torch.Tensor | float, label: torch.Tensor | float, eps: float = BCE_EPS) -> torch.Tensor:
    """Mean binary cross-entropy on probabilities clamped to [eps, 1 - eps]."""
    prob = torch.as_tensor(prob, dtype=prob.dtype if isinstance(prob, torch.Tensor) else torch.float64)
    label = torch.as_tensor(label, dtype=prob.dtype, device=prob.device)
    clamped = prob.clamp(eps, 1.0 - eps)
    losses = -(label * torch.log(clamped) + (1.0 - label) * torch.log1p(-clamped))
    return losses.mean()
