from pathlib import Path

import pytest
import torch

from bases.platform.hashing import state_hash
from components.adapters__torch import init_projection
from components.backbone__mock.backbone import MockBackbone
from components.data__synthetic import TEXT_CUE_WORDS, render_synthetic_image
from components.domain__encoding.entities import PromptTemplate
from components.domain__encoding.errors import ShapeError, WeightLoadError
from components.domain__meme.entities import SyntheticImage
from components.inversion__torch import (
    PhiNetwork,
    build_prompt,
    convert_phi_weights,
    encode_multimodal_batch,
    encode_multimodal_text,
    invert,
    load_phi,
    prompt_head_ids,
    prompt_tail_ids,
    pseudo_slot_index,
)


def _build_image(cue: int, seed: int):
    return render_synthetic_image(SyntheticImage(image_cue=cue, variant_seed=seed))


def test_invert_shapes_and_purity() -> None:
    backbone = MockBackbone()
    phi = PhiNetwork.stub(32, 32, scheme="seeded", seed=1)
    visual = backbone.encode_image(_build_image(0, 1))
    token = invert(visual, phi).values
    assert token.shape == (32,)
    assert torch.equal(token, invert(visual, phi).values)
    assert torch.equal(invert(visual, PhiNetwork.stub(32, 32, scheme="zero")).values, torch.zeros(32))
    assert torch.equal(invert(visual, PhiNetwork.stub(32, 32)).values, visual.values)
    with pytest.raises(ShapeError):
        phi(torch.zeros(16))


def test_prompt_has_one_slot_after_prefix() -> None:
    backbone = MockBackbone()
    template = PromptTemplate()
    pseudo = torch.full((32,), 7.0)
    sequence = build_prompt(pseudo, "ishtar is looking for love", template, backbone)
    slot = pseudo_slot_index(backbone, template)
    assert sequence.pseudo_index == slot == 1 + len(backbone.content_ids("a photo of"))
    assert torch.equal(sequence.embeddings[slot], pseudo)
    matches = [row for row in range(sequence.length) if torch.equal(sequence.embeddings[row], pseudo)]
    assert matches == [slot]
    assert sequence.eot_index == sequence.length - 1


def test_empty_text_drops_separator() -> None:
    backbone = MockBackbone()
    template = PromptTemplate()
    assert prompt_tail_ids(backbone, template, "") == [backbone.eot_id]
    sequence = build_prompt(torch.zeros(32), "", template, backbone)
    assert sequence.length == len(prompt_head_ids(backbone, template)) + 2


def test_long_text_truncates_tail_only() -> None:
    backbone = MockBackbone()
    template = PromptTemplate()
    sequence = build_prompt(torch.ones(32), "word " * 500, template, backbone)
    assert sequence.length == backbone.meta.context_len
    head = prompt_head_ids(backbone, template)
    assert torch.equal(sequence.embeddings[: len(head)], backbone.lookup(torch.tensor(head)))
    assert torch.equal(sequence.embeddings[-1], backbone.lookup(torch.tensor([backbone.eot_id]))[0])
    assert backbone.truncations == 1


def test_multimodal_text_depends_on_both_modalities() -> None:
    backbone = MockBackbone()
    phi = PhiNetwork.stub(32, 32)
    for index in range(20):
        text = " ".join(TEXT_CUE_WORDS[index % 2][:5])
        other_text = " ".join(TEXT_CUE_WORDS[(index + 1) % 2][:5])
        image = _build_image(index % 2, index)
        other_image = _build_image((index + 1) % 2, index + 100)
        base = encode_multimodal_text(image, text, backbone, phi).values
        assert base.shape == (32,)
        assert torch.linalg.norm(base - encode_multimodal_text(other_image, text, backbone, phi).values) > 1e-6
        assert torch.linalg.norm(base - encode_multimodal_text(image, other_text, backbone, phi).values) > 1e-6


def test_cue_combinations_give_distinct_features() -> None:
    backbone = MockBackbone()
    phi = PhiNetwork.stub(32, 32)
    features = [
        encode_multimodal_text(_build_image(image_cue, 4), " ".join(TEXT_CUE_WORDS[text_cue][:5]), backbone, phi).values
        for image_cue in (0, 1)
        for text_cue in (0, 1)
    ]
    for i in range(4):
        for j in range(i + 1, 4):
            assert not torch.equal(features[i], features[j])


def test_identity_phi_projection_matches_plain_path() -> None:
    backbone = MockBackbone()
    phi = PhiNetwork.stub(32, 32, scheme="seeded", seed=5)
    template = PromptTemplate()
    visual = backbone.encode_images([_build_image(0, 1), _build_image(1, 2)])
    tails = [prompt_tail_ids(backbone, template, text) for text in ("one meme", "")]
    head = prompt_head_ids(backbone, template)
    plain = encode_multimodal_batch(visual, tails, head, backbone, phi)
    for placement in ("input", "output"):
        phi_proj = init_projection(32, 32, "identity_padded", name="phi_proj")
        projected = encode_multimodal_batch(visual, tails, head, backbone, phi, phi_proj, placement)
        assert torch.equal(plain, projected)


def test_frozen_phi_stays_in_eval_mode() -> None:
    phi = PhiNetwork.searle(8, 8, hidden=16).freeze()
    phi.train()
    assert not phi.training
    x = torch.randn(3, 8)
    assert torch.equal(phi(x), phi(x))
    before = state_hash(phi)
    assert all(not parameter.requires_grad for parameter in phi.parameters())
    assert state_hash(phi) == before


def test_phi_weight_conversion_round_trip(tmp_path: Path) -> None:
    source = PhiNetwork.searle(8, 6, hidden=16)
    torch.save({"Phi": source.state_dict()}, tmp_path / "phi.pt")
    convert_phi_weights(tmp_path / "phi.pt", tmp_path / "phi_archive")
    loaded = load_phi(tmp_path / "phi_archive")
    assert (loaded.d, loaded.w, loaded.variant) == (8, 6, "searle")
    assert loaded.frozen
    x = torch.randn(2, 8)
    source.eval()
    assert torch.equal(loaded(x), source(x))


def test_truncated_phi_release_is_a_weight_error(tmp_path: Path) -> None:
    torch.save(PhiNetwork.searle(8, 6, hidden=16).state_dict(), tmp_path / "phi.pt")
    data = (tmp_path / "phi.pt").read_bytes()
    (tmp_path / "phi.pt").write_bytes(data[: len(data) // 2])
    with pytest.raises(WeightLoadError):
        convert_phi_weights(tmp_path / "phi.pt", tmp_path / "out")
    with pytest.raises(WeightLoadError):
        load_phi(tmp_path / "missing")
