"""Desk-scale confounder dataset.

Each meme carries one binary cue in its image and one in its caption; the
label is their XOR, so neither modality alone says anything about the label.
"""

import json
from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw

from components.domain__meme.entities import DatasetSplit, MemeRecord, SyntheticImage, SyntheticMemeSpec
from components.domain__meme.errors import InvalidArgumentError

CUE_COMBINATIONS: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (1, 1))
CAPTION_LENGTH = 5
TEXT_CUE_WORDS: dict[int, tuple[str, ...]] = {
    0: ("sunny", "garden", "picnic", "melody", "coffee", "river", "kitten", "blossom"),
    1: ("engine", "ledger", "quarry", "helmet", "tunnel", "cement", "anchor", "voltage"),
}
SPLIT_FRACTIONS = (("train", 0.6), ("dev_seen", 0.1))


def build_cue_specs(n: int, seed: int) -> list[SyntheticMemeSpec]:
    if n < 4:
        raise InvalidArgumentError(f"n must be >= 4, got {n}")
    specs: list[SyntheticMemeSpec] = []
    for index, (image_cue, text_cue) in enumerate(CUE_COMBINATIONS):
        count = n // 4 + (1 if index < n % 4 else 0)
        specs.extend(SyntheticMemeSpec(n=n, seed=seed, image_cue=image_cue, text_cue=text_cue) for _ in range(count))
    order = np.random.default_rng(seed).permutation(n)
    return [specs[int(i)] for i in order]


def compose_caption(text_cue: int, rng: np.random.Generator) -> str:
    words = TEXT_CUE_WORDS[text_cue]
    return " ".join(words[int(i)] for i in rng.integers(0, len(words), size=CAPTION_LENGTH))


def text_cue_of(text: str) -> int | None:
    votes = [cue for word in text.split() for cue, words in TEXT_CUE_WORDS.items() if word in words]
    if not votes:
        return None
    return int(round(sum(votes) / len(votes)))


def generate_synthetic_confounders(n: int, seed: int) -> DatasetSplit:
    specs = build_cue_specs(n, seed)
    rng = np.random.default_rng([seed, n])
    records = []
    for index, spec in enumerate(specs):
        variant_seed = int(rng.integers(0, 2**31 - 1))
        records.append(
            MemeRecord(
                id=f"synth-{seed}-{index:05d}",
                image_ref=SyntheticImage(image_cue=spec.image_cue, variant_seed=variant_seed),
                text=compose_caption(spec.text_cue, rng),
                label=spec.label,
            )
        )
    return DatasetSplit(name="train", records=tuple(records), source="synthetic")


def render_synthetic_image(descriptor: SyntheticImage) -> Image.Image:
    size = descriptor.size
    image = Image.new("RGB", (size, size))
    draw = ImageDraw.Draw(image)
    if descriptor.image_cue == 0:
        # dark horizontal stripes
        for top in range(0, size, 16):
            shade = 30 if (top // 16) % 2 == 0 else 70
            draw.rectangle([0, top, size - 1, top + 15], fill=(shade, shade, shade + 10))
    else:
        # bright checkerboard
        cell = max(1, size // 8)
        for row in range(0, size, cell):
            for col in range(0, size, cell):
                shade = 180 if ((row + col) // cell) % 2 == 0 else 230
                draw.rectangle([col, row, col + cell - 1, row + cell - 1], fill=(shade, shade - 10, shade))

    rng = np.random.default_rng(descriptor.variant_seed)
    width, height = (int(v) for v in rng.integers(size // 11, size // 4, size=2))
    left, top = int(rng.integers(0, size - width)), int(rng.integers(0, size - height))
    color = tuple(int(c) for c in rng.integers(90, 160, size=3))
    draw.rectangle([left, top, left + width, top + height], fill=color)
    return image


def split_synthetic(generated: DatasetSplit) -> dict[str, DatasetSplit]:
    records = generated.records
    splits: dict[str, DatasetSplit] = {}
    start = 0
    for name, fraction in SPLIT_FRACTIONS:
        stop = start + max(1, int(round(fraction * len(records))))
        splits[name] = DatasetSplit(name=name, records=records[start:stop], source="synthetic")
        start = stop
    splits["test_unseen"] = DatasetSplit(name="test_unseen", records=records[start:], source="synthetic")
    return splits


def write_synthetic_dataset(splits: dict[str, DatasetSplit], out_dir: Path) -> Path:
    """Write splits in the HMC on-disk layout: <split>.jsonl plus img/<id>.png."""
    out_dir = Path(out_dir)
    (out_dir / "img").mkdir(parents=True, exist_ok=True)
    for name, split in sorted(splits.items()):
        lines = []
        for record in split.records:
            if not isinstance(record.image_ref, SyntheticImage):
                raise InvalidArgumentError(f"Record {record.id} is not synthetic")
            relative = f"img/{record.id}.png"
            render_synthetic_image(record.image_ref).save(out_dir / relative, format="PNG")
            lines.append(json.dumps({"id": record.id, "img": relative, "label": record.label, "text": record.text}, sort_keys=True))
        (out_dir / f"{name}.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return out_dir
