import json
from pathlib import Path

import pytest

from components.data__jsonl import holdout_split, load_harmeme_split, load_hmc_split, load_image, merge_harmeme_label
from components.domain__meme.entities import DatasetSplit, MemeRecord, SyntheticImage
from components.domain__meme.errors import (
    DatasetNotFoundError,
    ImageDecodeError,
    InvalidArgumentError,
    LabelSchemeError,
    RecordParseError,
)


def _write_lines(path: Path, lines: list[dict | str]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(line if isinstance(line, str) else json.dumps(line) for line in lines) + "\n")


def _build_split(n: int) -> DatasetSplit:
    records = tuple(
        MemeRecord(id=f"r{i}", image_ref=SyntheticImage(image_cue=i % 2, variant_seed=i), text=f"t{i}", label=i % 2)
        for i in range(n)
    )
    return DatasetSplit(name="train", records=records, source="harmeme")


def test_hmc_loader_keeps_file_order_and_coerces_labels(tmp_path: Path) -> None:
    _write_lines(
        tmp_path / "train.jsonl",
        [
            {"id": "42", "img": "img/42.png", "label": 1, "text": "first"},
            {"id": "7", "img": "img/7.png", "label": "0", "text": ""},
            {"id": "9", "img": "img/9.png", "text": "unlabeled"},
        ],
    )
    split = load_hmc_split(tmp_path, "train")
    assert [record.id for record in split.records] == ["42", "7", "9"]
    assert [record.label for record in split.records] == [1, 0, None]
    assert split.records[0].image_ref == tmp_path / "img/42.png"
    assert split.records[1].text == ""
    assert not split.is_labeled
    assert load_hmc_split(tmp_path, "train") == split


def test_hmc_loader_errors(tmp_path: Path) -> None:
    with pytest.raises(DatasetNotFoundError):
        load_hmc_split(tmp_path / "nowhere", "train")
    with pytest.raises(DatasetNotFoundError):
        load_hmc_split(tmp_path, "dev_seen")
    _write_lines(tmp_path / "train.jsonl", [{"id": "1", "img": "a.png", "label": 0, "text": "ok"}, "{not json"])
    with pytest.raises(RecordParseError) as exc_info:
        load_hmc_split(tmp_path, "train")
    assert exc_info.value.line_number == 2
    _write_lines(tmp_path / "train.jsonl", [{"id": "1", "img": "a.png", "label": 0}, {"id": "1", "img": "b.png", "label": 1}])
    with pytest.raises(RecordParseError):
        load_hmc_split(tmp_path, "train")
    _write_lines(tmp_path / "train.jsonl", [{"id": "1", "img": "a.png", "label": 2}])
    with pytest.raises(RecordParseError):
        load_hmc_split(tmp_path, "train")


def test_hmc_size_mismatch_warns(tmp_path: Path, caplog: pytest.LogCaptureFixture) -> None:
    _write_lines(tmp_path / "dev_seen.jsonl", [{"id": "1", "img": "a.png", "label": 0, "text": "x"}])
    with caplog.at_level("WARNING"):
        load_hmc_split(tmp_path, "dev_seen")
    assert "expected 500" in caplog.text


def test_merge_harmeme_label() -> None:
    assert merge_harmeme_label("very harmful") == 1
    assert merge_harmeme_label("partially harmful") == 1
    assert merge_harmeme_label("harmless") == 0
    with pytest.raises(LabelSchemeError):
        merge_harmeme_label("somewhat harmful")


def test_harmeme_loader(tmp_path: Path) -> None:
    _write_lines(
        tmp_path / "test.jsonl",
        [
            {"id": "a", "image": "a.png", "labels": ["very harmful", "individual"], "text": "one"},
            {"id": "b", "image": "b.png", "labels": ["harmless"], "text": "two"},
            {"id": "c", "image": "c.png", "labels": ["partially harmful"], "text": "three"},
        ],
    )
    split = load_harmeme_split(tmp_path, "test")
    assert [record.label for record in split.records] == [1, 0, 1]
    assert split.records[0].image_ref == tmp_path / "images" / "a.png"
    assert split.source == "harmeme"
    _write_lines(tmp_path / "train.jsonl", [{"id": "a", "image": "a.png", "labels": ["somewhat harmful"], "text": "x"}])
    with pytest.raises(LabelSchemeError):
        load_harmeme_split(tmp_path, "train")


def test_missing_image_fails_only_at_load_time(tmp_path: Path) -> None:
    _write_lines(tmp_path / "train.jsonl", [{"id": "1", "img": "img/missing.png", "label": 0, "text": "x"}])
    split = load_hmc_split(tmp_path, "train")
    with pytest.raises(ImageDecodeError):
        load_image(split.records[0].image_ref)
    (tmp_path / "img").mkdir()
    (tmp_path / "img" / "missing.png").write_bytes(b"not an image")
    with pytest.raises(ImageDecodeError):
        load_image(split.records[0].image_ref)


def test_holdout_split_is_deterministic_partition() -> None:
    split = _build_split(50)
    kept, held = holdout_split(split, 0.1, seed=3)
    assert len(held) == 5
    assert len(kept) == 45
    assert (kept.name, held.name) == (split.name, "holdout")
    assert {r.id for r in kept.records} | {r.id for r in held.records} == {r.id for r in split.records}
    assert holdout_split(split, 0.1, seed=3) == (kept, held)
    with pytest.raises(InvalidArgumentError):
        holdout_split(split, 1.5)
