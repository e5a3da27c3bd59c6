import logging
from pathlib import Path

from components.data__jsonl.records import coerce_binary_label, iter_json_lines, require_field
from components.domain__meme.entities import DatasetSplit, MemeRecord, SplitName
from components.domain__meme.errors import DatasetNotFoundError, LabelSchemeError, RecordParseError

logger = logging.getLogger(__name__)

HMC_SPLIT_SIZES: dict[str, int] = {"train": 8500, "dev_seen": 500, "test_unseen": 2000}
HARMEME_SPLIT_SIZES: dict[str, int] = {"train": 3013, "test": 354}
HARMEME_LABELS: dict[str, int] = {"very harmful": 1, "partially harmful": 1, "harmless": 0}


def merge_harmeme_label(raw: str) -> int:
    normalized = " ".join(str(raw).lower().split())
    if normalized not in HARMEME_LABELS:
        raise LabelSchemeError(f"Unknown HarMeme label {raw!r}; expected one of {sorted(HARMEME_LABELS)}")
    return HARMEME_LABELS[normalized]


def _check_root(root: Path) -> Path:
    root = Path(root)
    if not root.is_dir():
        raise DatasetNotFoundError(f"Dataset root not found: {root}")
    return root


def _warn_on_size(source: str, split: str, actual: int, expected: dict[str, int]) -> None:
    if split in expected and actual != expected[split]:
        logger.warning("%s split %s has %d records, expected %d", source, split, actual, expected[split])


def _append_unique(records: list[MemeRecord], seen: set[str], record: MemeRecord, path: Path, line_number: int) -> None:
    if record.id in seen:
        raise RecordParseError(str(path), line_number, f"duplicate id {record.id!r}")
    seen.add(record.id)
    records.append(record)


def load_hmc_split(root: Path, split: SplitName) -> DatasetSplit:
    root = _check_root(root)
    path = root / f"{split}.jsonl"
    records: list[MemeRecord] = []
    seen: set[str] = set()
    for line_number, payload in iter_json_lines(path):
        record = MemeRecord(
            id=str(require_field(payload, "id", path, line_number)),
            image_ref=root / str(require_field(payload, "img", path, line_number)),
            text=str(payload.get("text") or ""),
            label=coerce_binary_label(payload.get("label"), path, line_number),
        )
        _append_unique(records, seen, record, path, line_number)
    _warn_on_size("hmc", split, len(records), HMC_SPLIT_SIZES)
    return DatasetSplit(name=split, records=tuple(records), source="hmc")


def _raw_harmeme_label(payload: dict) -> str | None:
    labels = payload.get("labels")
    if isinstance(labels, list) and labels:
        return str(labels[0])
    label = payload.get("label")
    return None if label is None else str(label)


def load_harmeme_split(root: Path, split: SplitName) -> DatasetSplit:
    root = _check_root(root)
    path = root / f"{split}.jsonl"
    records: list[MemeRecord] = []
    seen: set[str] = set()
    for line_number, payload in iter_json_lines(path):
        raw_label = _raw_harmeme_label(payload)
        image_name = payload.get("image") or payload.get("img")
        if image_name is None:
            raise RecordParseError(str(path), line_number, "missing field 'image'")
        image_ref = root / str(image_name) if "img" in payload else root / "images" / str(image_name)
        record = MemeRecord(
            id=str(require_field(payload, "id", path, line_number)),
            image_ref=image_ref,
            text=str(payload.get("text") or ""),
            label=None if raw_label is None else merge_harmeme_label(raw_label),
        )
        _append_unique(records, seen, record, path, line_number)
    _warn_on_size("harmeme", split, len(records), HARMEME_SPLIT_SIZES)
    return DatasetSplit(name=split, records=tuple(records), source="harmeme")
