import math

import torch

from components.training__torch.losses import BCE_EPS, bce_loss


def test_bce_analytic_values() -> None:
    assert abs(bce_loss(0.5, 1).item() - math.log(2.0)) < 1e-9
    assert bce_loss(1.0 - BCE_EPS, 1).item() < 1e-6
    batch = bce_loss(torch.tensor([0.9, 0.2], dtype=torch.float64), torch.tensor([1.0, 0.0], dtype=torch.float64))
    assert abs(batch.item() - 0.164252) < 1e-6
    assert abs(batch.item() - (-math.log(0.9) - math.log(0.8)) / 2) < 1e-12


def test_bce_is_finite_for_saturated_probabilities() -> None:
    logits = torch.tensor([-1e9, -50.0, 0.0, 50.0, 1e9])
    probs = torch.sigmoid(logits)
    for label in (0.0, 1.0):
        loss = bce_loss(probs, torch.full_like(probs, label))
        assert torch.isfinite(loss)


def test_bce_keeps_tensor_dtype() -> None:
    assert bce_loss(torch.tensor([0.3]), torch.tensor([1.0])).dtype == torch.float32
