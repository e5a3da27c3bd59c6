"""Deterministic stand-in encoder for desk-scale runs.

Visual path: 8x8 grayscale thumbnail, centered, through a seeded random
projection and tanh. Text path: seeded embedding table, mean over the
occupied rows, seeded projection, tanh.
"""

import hashlib
import re
from collections.abc import Sequence

import numpy as np
import torch
from PIL import Image
from torch import nn

from components.app__backbone.ports import Backbone
from components.domain__encoding.entities import BackboneMeta

THUMBNAIL_SIZE = 8
MOCK_VOCAB_SIZE = 4096
_WORD_PATTERN = re.compile(r"[\w']+|[^\w\s]")


class MockEncoderModule(nn.Module):
    def __init__(self, meta: BackboneMeta, seed: int) -> None:
        super().__init__()
        generator = torch.Generator().manual_seed(seed)
        pixels = THUMBNAIL_SIZE * THUMBNAIL_SIZE
        self.visual_projection = nn.Parameter(torch.randn(meta.d, pixels, generator=generator) * (4.0 / pixels**0.5))
        self.token_embedding = nn.Embedding(meta.vocab_size, meta.w)
        with torch.no_grad():
            self.token_embedding.weight.copy_(torch.randn(meta.vocab_size, meta.w, generator=generator))
        self.text_projection = nn.Parameter(torch.randn(meta.d, meta.w, generator=generator) * (2.0 / meta.w**0.5))


class MockBackbone(Backbone):
    def __init__(self, seed: int = 0, d: int = 32, w: int = 32, context_len: int = 77) -> None:
        super().__init__()
        self.seed = seed
        self.meta = BackboneMeta(d=d, w=w, context_len=context_len, name=f"mock-{seed}", vocab_size=MOCK_VOCAB_SIZE)
        self.sot_id = MOCK_VOCAB_SIZE - 2
        self.eot_id = MOCK_VOCAB_SIZE - 1
        self._module = MockEncoderModule(self.meta, seed).eval().requires_grad_(False)

    @property
    def module(self) -> nn.Module:
        return self._module

    @staticmethod
    def _thumbnail(image: Image.Image) -> torch.Tensor:
        gray = image.convert("L").resize((THUMBNAIL_SIZE, THUMBNAIL_SIZE), Image.Resampling.BOX)
        array = np.asarray(gray, dtype=np.float32) / 255.0 - 0.5
        return torch.from_numpy(array.reshape(-1).copy())

    def encode_images(self, images: Sequence[Image.Image]) -> torch.Tensor:
        pixels = torch.stack([self._thumbnail(image) for image in images])
        with torch.no_grad():
            return torch.tanh(pixels @ self._module.visual_projection.T)

    def _word_id(self, word: str) -> int:
        digest = hashlib.blake2b(word.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest, "little") % (self.meta.vocab_size - 2)

    def content_ids(self, text: str) -> list[int]:
        return [self._word_id(word) for word in _WORD_PATTERN.findall(text.lower())]

    def lookup(self, ids: torch.Tensor) -> torch.Tensor:
        return self._module.token_embedding(ids)

    def padding_row(self) -> torch.Tensor:
        return torch.zeros(self.meta.w)

    def encode_padded(self, embeddings: torch.Tensor, lengths: torch.Tensor, eot_index: torch.Tensor) -> torch.Tensor:
        positions = torch.arange(embeddings.shape[1]).unsqueeze(0)
        mask = (positions < lengths.unsqueeze(1)).to(embeddings.dtype).unsqueeze(-1)
        pooled = (embeddings * mask).sum(dim=1) / lengths.to(embeddings.dtype).unsqueeze(1)
        return torch.tanh(pooled @ self._module.text_projection.T.to(embeddings.dtype))
