from itertools import pairwise

import pytest
import torch
from torch import nn

from components.domain__encoding.errors import ShapeError
from components.domain__fusion.errors import ConfigurationError
from components.fusion__torch import (
    ClassificationHead,
    Combiner,
    InteractionHead,
    baseline_fuse,
    classify,
    combine,
    interaction_fuse,
    interaction_matrix,
)
from components.training__torch.losses import bce_loss


def _build_identity_combiner(p: int) -> Combiner:
    combiner = Combiner(p, p, dropout=0.0)
    combiner.text_branch = nn.Identity()
    combiner.image_branch = nn.Identity()
    with torch.no_grad():
        for final in (combiner.gate[-1], combiner.residual[-1]):
            final.weight.zero_()
            final.bias.zero_()
    return combiner.eval()


def test_forced_combiner_returns_mean() -> None:
    combiner = _build_identity_combiner(16)
    text, image = torch.randn(4, 16), torch.randn(4, 16)
    assert torch.equal(combine(text, image, combiner), 0.5 * (text + image))


def test_combiner_shape_and_gate() -> None:
    torch.manual_seed(0)
    combiner = Combiner(16, 24, dropout=0.0).eval()
    text, image = torch.randn(5, 16), torch.randn(5, 16)
    assert combine(text, image, combiner).shape == (5, 24)
    lam = combiner.mixing_weight(text, image)
    assert ((lam > 0) & (lam < 1)).all()

    # gate re-evaluated by hand from the layer weights
    t = torch.relu(text @ combiner.text_branch[0].weight.T + combiner.text_branch[0].bias)
    i = torch.relu(image @ combiner.image_branch[0].weight.T + combiner.image_branch[0].bias)
    joint = torch.cat([t, i], dim=-1)
    hidden = torch.relu(joint @ combiner.gate[0].weight.T + combiner.gate[0].bias)
    manual = 1.0 / (1.0 + torch.exp(-(hidden @ combiner.gate[3].weight.T + combiner.gate[3].bias)))
    assert torch.allclose(manual, lam, atol=1e-6)
    with pytest.raises(ShapeError):
        combine(torch.zeros(3), torch.zeros(16), combiner)


def test_interaction_matrix_layout() -> None:
    image = torch.tensor([2.0, 3.0])
    text = torch.tensor([5.0, 7.0])
    assert torch.equal(interaction_matrix(image, text), torch.tensor([10.0, 14.0, 15.0, 21.0]))
    swapped = interaction_matrix(text, image)
    assert not torch.equal(swapped, interaction_matrix(image, text))


def test_interaction_head_zero_text() -> None:
    head = InteractionHead(4, hidden=8, dropout=0.0).eval()
    assert head.input_dim == 16
    logit = interaction_fuse(torch.zeros(4), torch.randn(4), head)
    assert torch.equal(logit, head.mlp(torch.zeros(16)).squeeze(-1))
    with pytest.raises(ShapeError):
        interaction_fuse(torch.zeros(3), torch.zeros(4), head)


def test_classify_properties() -> None:
    head = ClassificationHead(8, dropout=0.0).eval()
    fused = torch.randn(8)
    with torch.no_grad():
        head.mlp[-1].weight.zero_()
        head.mlp[-1].bias.zero_()
    logit, prob = classify(fused, head)
    assert logit.item() == 0.0 and prob.item() == 0.5

    probs = []
    for bias in torch.linspace(-20, 20, 101).tolist():
        with torch.no_grad():
            head.mlp[-1].bias.fill_(bias)
        probs.append(classify(fused, head)[1].item())
    assert all(later >= earlier for earlier, later in pairwise(probs))

    for bias, expected in ((1e9, 1.0), (-1e9, 0.0)):
        with torch.no_grad():
            head.mlp[-1].bias.fill_(bias)
        logit, prob = classify(fused, head)
        assert logit.item() == bias
        assert prob.item() == pytest.approx(expected)


def test_baseline_fuse_modes() -> None:
    visual, textual, textual_ti = torch.randn(3, 8), torch.randn(3, 8), torch.randn(3, 8)
    assert torch.equal(baseline_fuse("sum", visual=visual, textual=textual), visual + textual)
    assert torch.equal(baseline_fuse("image_only", visual=visual, textual=textual), visual)
    assert torch.equal(baseline_fuse("image_only", visual=visual, textual=torch.randn(3, 8)), visual)
    assert torch.equal(baseline_fuse("text_only", textual=textual), textual)
    assert torch.equal(baseline_fuse("text_plus_ti", textual_ti=textual_ti), textual_ti)
    with pytest.raises(ConfigurationError):
        baseline_fuse("sum", visual=visual)
    with pytest.raises(ConfigurationError):
        baseline_fuse("late", visual=visual)


def _loss_for(combiner: Combiner, head: ClassificationHead, text, image, labels) -> torch.Tensor:
    return bce_loss(torch.sigmoid(head(combiner(text, image))), labels)


def _loss_and_pattern(combiner: Combiner, head: ClassificationHead, text, image, labels) -> tuple[float, torch.Tensor]:
    signs: list[torch.Tensor] = []
    hooks = [
        module.register_forward_hook(lambda _module, inputs, _output: signs.append((inputs[0] > 0).reshape(-1)))
        for module in (*combiner.modules(), *head.modules())
        if isinstance(module, nn.ReLU)
    ]
    try:
        loss = _loss_for(combiner, head, text, image, labels)
    finally:
        for hook in hooks:
            hook.remove()
    return loss.item(), torch.cat(signs)


def test_combiner_and_head_gradients_match_finite_differences() -> None:
    step = 1e-4
    checked = skipped = 0
    for draw in range(10):
        torch.manual_seed(draw)
        combiner = Combiner(16, 16, dropout=0.0).double().eval()
        head = ClassificationHead(16, dropout=0.0).double().eval()
        text, image = torch.randn(4, 16, dtype=torch.float64), torch.randn(4, 16, dtype=torch.float64)
        labels = torch.tensor([0.0, 1.0, 1.0, 0.0], dtype=torch.float64)
        parameters = list(combiner.parameters()) + list(head.parameters())
        loss = _loss_for(combiner, head, text, image, labels)
        analytic = torch.cat([g.reshape(-1) for g in torch.autograd.grad(loss, parameters)])
        _, pattern = _loss_and_pattern(combiner, head, text, image, labels)
        numeric, smooth = [], []
        with torch.no_grad():
            for parameter in parameters:
                flat = parameter.view(-1)
                for index in range(flat.numel()):
                    original = flat[index].item()
                    flat[index] = original + step
                    upper, upper_pattern = _loss_and_pattern(combiner, head, text, image, labels)
                    flat[index] = original - step
                    lower, lower_pattern = _loss_and_pattern(combiner, head, text, image, labels)
                    flat[index] = original
                    numeric.append((upper - lower) / (2 * step))
                    # skip coordinates whose step crosses a ReLU kink
                    smooth.append(torch.equal(upper_pattern, pattern) and torch.equal(lower_pattern, pattern))
        numeric_tensor = torch.tensor(numeric, dtype=torch.float64)
        mask = torch.tensor(smooth)
        scale = torch.maximum(analytic.abs(), numeric_tensor.abs()).clamp_min(1e-5)
        relative = ((analytic - numeric_tensor).abs() / scale)[mask]
        assert relative.max() < 1e-3
        checked += int(mask.sum())
        skipped += int((~mask).sum())
    assert checked > 0.9 * (checked + skipped)
