import pytest
import torch

from bases.platform.hashing import state_hash
from components.adapters__torch import Projection, init_projection, project, set_frozen
from components.domain__encoding.errors import ShapeError


def _train_steps(projection: Projection, steps: int) -> None:
    parameters = [p for p in projection.parameters() if p.requires_grad]
    optimizer = torch.optim.AdamW(parameters, lr=1e-2) if parameters else None
    generator = torch.Generator().manual_seed(0)
    for _ in range(steps):
        x = torch.randn(4, projection.p_in, generator=generator)
        loss = project(x, projection).pow(2).sum()
        if optimizer is None:
            continue
        optimizer.zero_grad()
        loss.backward()
        optimizer.step()


def test_identity_and_zero_weight_projections() -> None:
    identity = init_projection(32, 32, "identity_padded")
    x = torch.randn(32)
    assert torch.equal(identity.weight, torch.eye(32))
    assert torch.equal(identity.bias, torch.zeros(32))
    assert torch.equal(project(x, identity), x)

    bias_only = init_projection(3, 2, "seeded_uniform", seed=1)
    with torch.no_grad():
        bias_only.linear.weight.zero_()
    assert torch.equal(project(x[:3], bias_only), bias_only.bias)


def test_hand_matrix_multiply() -> None:
    projection = Projection("textual_proj", 2, 3)
    with torch.no_grad():
        projection.linear.weight.copy_(torch.tensor([[1.0, 2.0], [-1.0, 0.5], [0.0, 3.0]]))
        projection.linear.bias.copy_(torch.tensor([0.5, -1.0, 2.0]))
    x = torch.tensor([2.0, -4.0])
    expected = torch.tensor([1.0 * 2 + 2.0 * -4 + 0.5, -1.0 * 2 + 0.5 * -4 - 1.0, 0.0 * 2 + 3.0 * -4 + 2.0])
    assert torch.allclose(project(x, projection), expected)
    with pytest.raises(ShapeError):
        project(torch.zeros(3), projection)


def test_seeded_uniform_is_deterministic_and_bounded() -> None:
    first = init_projection(32, 64, "seeded_uniform", seed=0)
    second = init_projection(32, 64, "seeded_uniform", seed=0)
    assert torch.equal(first.weight, second.weight) and torch.equal(first.bias, second.bias)
    bound = 1.0 / 32**0.5
    assert first.weight.abs().max() <= bound
    assert first.bias.abs().max() <= bound
    assert not torch.equal(first.weight, init_projection(32, 64, "seeded_uniform", seed=1).weight)


def test_freezing_contract() -> None:
    projection = init_projection(8, 8, "seeded_uniform", seed=2)
    set_frozen(projection, True)
    before = state_hash(projection)
    _train_steps(projection, 100)
    assert projection.frozen
    assert state_hash(projection) == before

    set_frozen(projection, False)
    _train_steps(projection, 1)
    assert state_hash(projection) != before

    set_frozen(set_frozen(projection, True), False)
    assert not projection.frozen


def test_projection_is_affine() -> None:
    projection = init_projection(5, 4, "seeded_uniform", seed=3).double()
    x, y = torch.randn(5, dtype=torch.float64), torch.randn(5, dtype=torch.float64)
    alpha, beta = 0.7, -1.3
    left = project(alpha * x + beta * y, projection)
    right = alpha * project(x, projection) + beta * project(y, projection) - (alpha + beta - 1) * projection.bias
    assert torch.allclose(left, right, atol=1e-12)
