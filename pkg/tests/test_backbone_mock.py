import random
from pathlib import Path

import pytest
import torch
import torch.nn.functional as F

from bases.platform.tensor_archive import write_archive
from components.app__backbone.use_cases.load_backbone import load_backbone
from components.backbone__mock.backbone import MOCK_VOCAB_SIZE, MockBackbone
from components.data__synthetic import render_synthetic_image
from components.domain__encoding.errors import ShapeError, VocabularyError, WeightLoadError
from components.domain__meme.entities import SyntheticImage

WORDS = ["meme", "cat", "love", "hate", "the", "a", "photo", "of", ",", "!", "ishtar", "looking", "for"]


def _build_random_texts(count: int, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    return [" ".join(rng.choice(WORDS) for _ in range(rng.randint(0, 120))) for _ in range(count)]


def test_mock_meta_defaults() -> None:
    backbone = load_backbone("mock", seed=0)
    assert (backbone.meta.d, backbone.meta.w, backbone.meta.context_len) == (32, 32, 77)
    assert backbone.meta.vocab_size == MOCK_VOCAB_SIZE


def test_tokenize_markers_and_truncation() -> None:
    backbone = MockBackbone()
    assert backbone.tokenize("") == [backbone.sot_id, backbone.eot_id]
    long_ids = backbone.tokenize("word " * 500)
    assert len(long_ids) == backbone.meta.context_len
    assert long_ids[0] == backbone.sot_id and long_ids[-1] == backbone.eot_id
    assert backbone.truncations == 1


def test_embed_tokens_shapes_and_vocabulary() -> None:
    backbone = MockBackbone()
    sequence = backbone.embed_tokens([backbone.sot_id, backbone.eot_id])
    assert sequence.embeddings.shape == (2, 32)
    assert torch.equal(sequence.embeddings, backbone.embed_tokens([backbone.sot_id, backbone.eot_id]).embeddings)
    with pytest.raises(VocabularyError):
        backbone.embed_tokens([backbone.sot_id, MOCK_VOCAB_SIZE])
    with pytest.raises(ShapeError):
        backbone.embed_tokens([1] * 78)


def test_text_factorization_is_bit_exact() -> None:
    backbone = MockBackbone(seed=3)
    for text in _build_random_texts(100):
        one_shot = backbone.encode_text(text).values
        factorized = backbone.encode_token_embeddings(backbone.embed_tokens(backbone.tokenize(text))).values
        assert torch.equal(one_shot, factorized)
        assert one_shot.shape == (32,)


def test_batched_text_encoding_preserves_order() -> None:
    backbone = MockBackbone()
    texts = _build_random_texts(6, seed=1)
    batched = backbone.encode_texts(texts)
    for index, text in enumerate(texts):
        assert torch.allclose(batched[index], backbone.encode_text(text).values, atol=1e-6)


def test_every_occupied_row_matters() -> None:
    backbone = MockBackbone()
    sequence = backbone.embed_tokens(backbone.tokenize("a photo of a cat"))
    base = backbone.encode_token_embeddings(sequence).values
    for row in range(sequence.length):
        embeddings = sequence.embeddings.clone()
        embeddings[row] += 0.5
        perturbed = type(sequence)(embeddings=embeddings, length=sequence.length, eot_index=sequence.eot_index)
        assert torch.linalg.norm(backbone.encode_token_embeddings(perturbed).values - base) > 0


def test_visual_features_are_deterministic_and_cue_sensitive() -> None:
    backbone = MockBackbone()
    stripes = render_synthetic_image(SyntheticImage(image_cue=0, variant_seed=1))
    checker = render_synthetic_image(SyntheticImage(image_cue=1, variant_seed=1))
    first = backbone.encode_image(stripes).values
    assert torch.equal(first, MockBackbone().encode_image(stripes).values)
    assert F.cosine_similarity(first, backbone.encode_image(checker).values, dim=0) < 0.99
    batch = backbone.encode_images([checker, stripes])
    assert torch.allclose(batch[1], first, atol=1e-6)


def test_mock_visual_features_separate_image_cue() -> None:
    backbone = MockBackbone()
    images = [render_synthetic_image(SyntheticImage(image_cue=i % 2, variant_seed=i)) for i in range(80)]
    features = backbone.encode_images(images)
    cues = torch.tensor([i % 2 for i in range(80)], dtype=torch.float32)
    # least-squares linear probe
    design = torch.cat([features, torch.ones(80, 1)], dim=1).double()
    weights = torch.linalg.lstsq(design, cues.double().unsqueeze(1)).solution
    predictions = (design @ weights).squeeze(1) >= 0.5
    assert (predictions == cues.bool()).double().mean() >= 0.95


def test_backbone_hash_is_stable() -> None:
    backbone = MockBackbone(seed=2)
    before = backbone.state_hash()
    backbone.encode_texts(["hello world"])
    assert backbone.state_hash() == before
    assert MockBackbone(seed=3).state_hash() != before


def test_pretrained_backbone_errors(tmp_path: Path) -> None:
    with pytest.raises(WeightLoadError):
        load_backbone("pretrained", None)
    write_archive(tmp_path / "clip", {"w": torch.zeros(2)}, {"architecture": "ViT-L-14"})
    blob = tmp_path / "clip" / "tensors.bin"
    blob.write_bytes(blob.read_bytes()[:3])
    with pytest.raises(WeightLoadError):
        load_backbone("pretrained", str(tmp_path / "clip"))


def test_reference_tokenizer_prompt_prefix() -> None:
    tokenizer_module = pytest.importorskip("open_clip.tokenizer")
    tokenizer = tokenizer_module.SimpleTokenizer()
    assert len(tokenizer.encode("a photo of")) == 3
