import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence

import torch
from PIL import Image
from torch import nn

from bases.platform.hashing import state_hash
from components.domain__encoding.entities import BackboneMeta, FeatureVector, TokenEmbeddingSequence
from components.domain__encoding.errors import ShapeError, VocabularyError

logger = logging.getLogger(__name__)


class Backbone(ABC):
    """Frozen vision-language encoder, exposed at the token-embedding level.

    The string-level text path is derived: ``encode_text`` is exactly
    ``encode_token_embeddings(embed_tokens(tokenize(text)))``.
    """

    meta: BackboneMeta
    sot_id: int
    eot_id: int

    def __init__(self) -> None:
        self.truncations = 0

    @property
    @abstractmethod
    def module(self) -> nn.Module:
        raise NotImplementedError

    @abstractmethod
    def encode_images(self, images: Sequence[Image.Image]) -> torch.Tensor:
        """Return a (B, d) tensor of visual features, in input order."""
        raise NotImplementedError

    @abstractmethod
    def content_ids(self, text: str) -> list[int]:
        """Token ids of ``text`` without start/end markers and without truncation."""
        raise NotImplementedError

    @abstractmethod
    def lookup(self, ids: torch.Tensor) -> torch.Tensor:
        raise NotImplementedError

    @abstractmethod
    def padding_row(self) -> torch.Tensor:
        raise NotImplementedError

    @abstractmethod
    def encode_padded(self, embeddings: torch.Tensor, lengths: torch.Tensor, eot_index: torch.Tensor) -> torch.Tensor:
        """Encode (B, context_len, w) embeddings into (B, d) textual features."""
        raise NotImplementedError

    def state_hash(self) -> str:
        return state_hash(self.module)

    def encode_image(self, image: Image.Image) -> FeatureVector:
        return FeatureVector(values=self.encode_images([image])[0], modality="visual")

    def tokenize(self, text: str) -> list[int]:
        ids = [self.sot_id, *self.content_ids(text)]
        if len(ids) + 1 > self.meta.context_len:
            ids = ids[: self.meta.context_len - 1]
            self.truncations += 1
            logger.debug("Truncated text to %d tokens", self.meta.context_len)
        return [*ids, self.eot_id]

    def embed_tokens(self, ids: Sequence[int]) -> TokenEmbeddingSequence:
        if len(ids) > self.meta.context_len:
            raise ShapeError(f"{len(ids)} tokens exceed context length {self.meta.context_len}")
        bad = [token for token in ids if not 0 <= int(token) < self.meta.vocab_size]
        if bad:
            raise VocabularyError(f"Token ids {bad[:5]} outside vocabulary of size {self.meta.vocab_size}")
        embeddings = self.lookup(torch.tensor(list(ids), dtype=torch.long))
        return TokenEmbeddingSequence(embeddings=embeddings, length=len(ids), eot_index=len(ids) - 1)

    def encode_token_embedding_batch(self, sequences: Sequence[TokenEmbeddingSequence]) -> torch.Tensor:
        context_len, w = self.meta.context_len, self.meta.w
        padded = []
        for sequence in sequences:
            if sequence.length > context_len or sequence.embeddings.shape[1] != w:
                raise ShapeError(f"Sequence of shape {tuple(sequence.embeddings.shape)} does not fit ({context_len}, {w})")
            pad = self.padding_row().to(sequence.embeddings.dtype).expand(context_len - sequence.length, w)
            padded.append(torch.cat([sequence.embeddings, pad], dim=0))
        lengths = torch.tensor([sequence.length for sequence in sequences], dtype=torch.long)
        eot_index = torch.tensor([sequence.eot_index for sequence in sequences], dtype=torch.long)
        return self.encode_padded(torch.stack(padded), lengths, eot_index)

    def encode_token_embeddings(self, sequence: TokenEmbeddingSequence) -> FeatureVector:
        return FeatureVector(values=self.encode_token_embedding_batch([sequence])[0], modality="textual")

    def encode_texts(self, texts: Sequence[str]) -> torch.Tensor:
        return self.encode_token_embedding_batch([self.embed_tokens(self.tokenize(text)) for text in texts])

    def encode_text(self, text: str) -> FeatureVector:
        return self.encode_token_embeddings(self.embed_tokens(self.tokenize(text)))
