from dataclasses import dataclass
from pathlib import Path
from typing import Literal

SplitName = Literal["train", "dev_seen", "test_unseen", "test", "holdout"]
DatasetSource = Literal["hmc", "harmeme", "synthetic"]
Label = Literal[0, 1]


@dataclass(frozen=True)
class SyntheticImage:
    """Procedural image descriptor; rendered on demand by the synthetic generator."""

    image_cue: int
    variant_seed: int
    size: int = 224


ImageRef = Path | SyntheticImage


@dataclass(frozen=True)
class MemeRecord:
    id: str
    image_ref: ImageRef
    text: str
    label: int | None


@dataclass(frozen=True)
class DatasetSplit:
    name: SplitName
    records: tuple[MemeRecord, ...]
    source: DatasetSource

    def __len__(self) -> int:
        return len(self.records)

    @property
    def is_labeled(self) -> bool:
        return all(record.label is not None for record in self.records)

    @property
    def labels(self) -> list[int]:
        return [int(record.label) for record in self.records if record.label is not None]


@dataclass(frozen=True)
class SyntheticMemeSpec:
    n: int
    seed: int
    image_cue: int
    text_cue: int

    @property
    def label(self) -> int:
        return self.image_cue ^ self.text_cue
