from components.data__jsonl.images import load_image
from components.data__jsonl.loaders import (
    HARMEME_SPLIT_SIZES,
    HMC_SPLIT_SIZES,
    load_harmeme_split,
    load_hmc_split,
    merge_harmeme_label,
)
from components.data__jsonl.splits import holdout_split

__all__ = [
    "HARMEME_SPLIT_SIZES",
    "HMC_SPLIT_SIZES",
    "holdout_split",
    "load_harmeme_split",
    "load_hmc_split",
    "load_image",
    "merge_harmeme_label",
]
