from dataclasses import dataclass
from typing import Literal

import torch

from components.domain__encoding.errors import ShapeError

Modality = Literal["visual", "textual"]


@dataclass(frozen=True)
class BackboneMeta:
    d: int
    w: int
    context_len: int
    name: str
    vocab_size: int

    def __post_init__(self) -> None:
        if self.d <= 0 or self.w <= 0 or self.context_len < 8:
            raise ShapeError(f"Invalid backbone dims d={self.d} w={self.w} context_len={self.context_len}")


@dataclass(frozen=True)
class FeatureVector:
    values: torch.Tensor
    modality: Modality

    def __post_init__(self) -> None:
        if self.values.dim() != 1:
            raise ShapeError(f"FeatureVector must be 1-D, got shape {tuple(self.values.shape)}")
        if not torch.isfinite(self.values).all():
            raise ShapeError("FeatureVector has non-finite entries")


@dataclass(frozen=True)
class TokenEmbeddingSequence:
    embeddings: torch.Tensor
    length: int
    eot_index: int
    pseudo_index: int | None = None

    def __post_init__(self) -> None:
        if self.embeddings.dim() != 2 or self.embeddings.shape[0] != self.length:
            raise ShapeError(f"Embedding rows {tuple(self.embeddings.shape)} do not match length {self.length}")
        if not 0 <= self.eot_index < self.length:
            raise ShapeError(f"eot_index {self.eot_index} outside sequence of length {self.length}")


@dataclass(frozen=True)
class PseudoToken:
    values: torch.Tensor


@dataclass(frozen=True)
class PromptTemplate:
    prefix: str = "a photo of"
    separator: str = ", "
