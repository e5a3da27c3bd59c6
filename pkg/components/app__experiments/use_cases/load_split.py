from pathlib import Path

from components.config__pydantic.run_config import RunConfig
from components.data__jsonl.loaders import load_harmeme_split, load_hmc_split
from components.data__synthetic.generator import generate_synthetic_confounders, split_synthetic
from components.domain__meme.entities import DatasetSplit, SplitName
from components.domain__meme.errors import DatasetNotFoundError


def load_split(config: RunConfig, name: SplitName) -> DatasetSplit:
    data = config.data
    if data.source == "synthetic":
        splits = split_synthetic(generate_synthetic_confounders(data.synthetic_n, data.synthetic_seed))
        if name not in splits:
            raise DatasetNotFoundError(f"Synthetic data has no split {name!r}; choose one of {sorted(splits)}")
        return splits[name]
    if data.source == "harmeme":
        return load_harmeme_split(Path(data.root), name)
    return load_hmc_split(Path(data.root), name)
