import numpy as np

from components.domain__meme.entities import DatasetSplit
from components.domain__meme.errors import InvalidArgumentError


def holdout_split(split: DatasetSplit, fraction: float = 0.1, seed: int = 0) -> tuple[DatasetSplit, DatasetSplit]:
    """Deterministically carve a selection holdout out of a training split; order is preserved inside each part."""
    if not 0.0 < fraction < 1.0:
        raise InvalidArgumentError(f"fraction must be in (0, 1), got {fraction}")
    n_holdout = max(1, int(round(fraction * len(split))))
    if n_holdout >= len(split):
        raise InvalidArgumentError(f"split {split.name} is too small for a {fraction:.0%} holdout")
    chosen = set(int(i) for i in np.random.default_rng(seed).permutation(len(split))[:n_holdout])
    kept = tuple(record for index, record in enumerate(split.records) if index not in chosen)
    held = tuple(record for index, record in enumerate(split.records) if index in chosen)
    return (
        DatasetSplit(name=split.name, records=kept, source=split.source),
        DatasetSplit(name="holdout", records=held, source=split.source),
    )
