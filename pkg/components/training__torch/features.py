import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Literal

import torch

from components.app__backbone.ports import Backbone
from components.data__jsonl.images import load_image
from components.domain__encoding.entities import PromptTemplate
from components.domain__meme.entities import DatasetSplit, MemeRecord
from components.domain__training.errors import TrainingError
from components.inversion__torch.multimodal import encode_multimodal_batch
from components.inversion__torch.phi import PhiNetwork
from components.inversion__torch.prompt import prompt_head_ids, prompt_tail_ids

logger = logging.getLogger(__name__)

ENCODE_BATCH_SIZE = 64

TextPath = Literal["raw", "prompt"] | None


@dataclass
class FeatureBatch:
    ids: list[str]
    visual: torch.Tensor
    textual: torch.Tensor
    tail_ids: list[list[int]]
    labels: torch.Tensor | None = None
    textual_ti: torch.Tensor | None = None

    def __len__(self) -> int:
        return len(self.ids)


class FeatureBank:
    """Frozen-backbone outputs for one split, encoded once and replayed every epoch."""

    def __init__(
        self,
        ids: list[str],
        visual: torch.Tensor,
        textual: torch.Tensor,
        tail_ids: list[list[int]],
        labels: torch.Tensor | None,
        head_ids: list[int],
        textual_ti: torch.Tensor | None = None,
        name: str = "",
        text_truncations: int = 0,
        prompt_truncations: int = 0,
    ) -> None:
        self.ids = ids
        self.visual = visual
        self.textual = textual
        self.tail_ids = tail_ids
        self.labels = labels
        self.head_ids = head_ids
        self.textual_ti = textual_ti
        self.name = name
        self.text_truncations = text_truncations
        self.prompt_truncations = prompt_truncations

    def __len__(self) -> int:
        return len(self.ids)

    def truncations_for(self, text_path: TextPath) -> int:
        """Over-length texts on the path a model reads; each record counts at most once."""
        if text_path == "raw":
            return self.text_truncations
        if text_path == "prompt":
            return self.prompt_truncations
        return 0

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None

    @classmethod
    def build(
        cls,
        records: DatasetSplit | Sequence[MemeRecord],
        backbone: Backbone,
        template: PromptTemplate,
        *,
        phi: PhiNetwork | None = None,
        batch_size: int = ENCODE_BATCH_SIZE,
    ) -> "FeatureBank":
        name = records.name if isinstance(records, DatasetSplit) else ""
        items = list(records.records if isinstance(records, DatasetSplit) else records)
        if not items:
            raise TrainingError(f"Cannot build features for empty split {name!r}")
        head_ids = prompt_head_ids(backbone, template)
        visual_chunks, textual_chunks, ti_chunks = [], [], []
        tail_ids: list[list[int]] = []
        text_truncations = prompt_truncations = 0
        for start in range(0, len(items), batch_size):
            chunk = items[start : start + batch_size]
            visual = backbone.encode_images([load_image(record.image_ref) for record in chunk])
            before = backbone.truncations
            chunk_tails = [prompt_tail_ids(backbone, template, record.text) for record in chunk]
            prompt_truncations += backbone.truncations - before
            with torch.no_grad():
                before = backbone.truncations
                textual = backbone.encode_texts([record.text for record in chunk])
                text_truncations += backbone.truncations - before
                if phi is not None:
                    ti_chunks.append(encode_multimodal_batch(visual, chunk_tails, head_ids, backbone, phi))
            visual_chunks.append(visual)
            textual_chunks.append(textual)
            tail_ids.extend(chunk_tails)
        labels = None
        if all(record.label is not None for record in items):
            labels = torch.tensor([float(record.label) for record in items], dtype=torch.float32)
        if text_truncations or prompt_truncations:
            logger.warning(
                "Truncated %d texts and %d prompts while encoding %s",
                text_truncations,
                prompt_truncations,
                name or "records",
            )
        logger.info("Encoded %d records of %s", len(items), name or "records")
        return cls(
            ids=[record.id for record in items],
            visual=torch.cat(visual_chunks),
            textual=torch.cat(textual_chunks),
            tail_ids=tail_ids,
            labels=labels,
            head_ids=head_ids,
            textual_ti=torch.cat(ti_chunks) if ti_chunks else None,
            name=name,
            text_truncations=text_truncations,
            prompt_truncations=prompt_truncations,
        )

    def batch(self, indices: Sequence[int]) -> FeatureBatch:
        index = torch.as_tensor(list(indices), dtype=torch.long)
        return FeatureBatch(
            ids=[self.ids[i] for i in indices],
            visual=self.visual[index],
            textual=self.textual[index],
            tail_ids=[self.tail_ids[i] for i in indices],
            labels=self.labels[index] if self.labels is not None else None,
            textual_ti=self.textual_ti[index] if self.textual_ti is not None else None,
        )

    def batches(self, batch_size: int, generator: torch.Generator | None = None) -> Iterator[FeatureBatch]:
        """Shuffled when a generator is given; otherwise in record order."""
        if generator is None:
            order = list(range(len(self)))
        else:
            order = torch.randperm(len(self), generator=generator).tolist()
        for start in range(0, len(order), batch_size):
            yield self.batch(order[start : start + batch_size])
