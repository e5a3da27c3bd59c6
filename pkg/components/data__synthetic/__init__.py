from components.data__synthetic.generator import (
    TEXT_CUE_WORDS,
    build_cue_specs,
    generate_synthetic_confounders,
    render_synthetic_image,
    split_synthetic,
    text_cue_of,
    write_synthetic_dataset,
)

__all__ = [
    "TEXT_CUE_WORDS",
    "build_cue_specs",
    "generate_synthetic_confounders",
    "render_synthetic_image",
    "split_synthetic",
    "text_cue_of",
    "write_synthetic_dataset",
]
