import json
from pathlib import Path

import pytest
import torch

from bases.platform.tensor_archive import (
    ArchiveIntegrityError,
    ArchiveNotFoundError,
    encode_archive,
    read_archive,
    write_archive,
)


def _build_tensors() -> dict[str, torch.Tensor]:
    generator = torch.Generator().manual_seed(0)
    return {
        "b.weight": torch.randn(3, 2, generator=generator),
        "a.bias": torch.randn(4, generator=generator),
    }


def test_archive_round_trip_is_exact(tmp_path: Path) -> None:
    tensors = _build_tensors()
    write_archive(tmp_path / "archive", tensors, {"kind": "test"})
    archive = read_archive(tmp_path / "archive")
    assert archive.metadata == {"kind": "test"}
    for name, tensor in tensors.items():
        assert torch.equal(archive.tensors[name], tensor)


def test_archive_bytes_depend_only_on_content() -> None:
    tensors = _build_tensors()
    reordered = dict(reversed(list(tensors.items())))
    assert encode_archive(tensors, {"x": 1}) == encode_archive(reordered, {"x": 1})


def test_tampered_blob_fails_verification(tmp_path: Path) -> None:
    write_archive(tmp_path / "archive", _build_tensors(), {})
    blob = tmp_path / "archive" / "tensors.bin"
    data = bytearray(blob.read_bytes())
    data[5] ^= 0xFF
    blob.write_bytes(bytes(data))
    with pytest.raises(ArchiveIntegrityError) as exc_info:
        read_archive(tmp_path / "archive")
    assert exc_info.value.problems


def test_truncated_blob_and_missing_files(tmp_path: Path) -> None:
    write_archive(tmp_path / "archive", _build_tensors(), {})
    blob = tmp_path / "archive" / "tensors.bin"
    blob.write_bytes(blob.read_bytes()[:10])
    with pytest.raises(ArchiveIntegrityError):
        read_archive(tmp_path / "archive")
    with pytest.raises(ArchiveNotFoundError):
        read_archive(tmp_path / "missing")


def test_manifest_lists_offsets_in_sorted_order(tmp_path: Path) -> None:
    write_archive(tmp_path / "archive", _build_tensors(), {})
    manifest = json.loads((tmp_path / "archive" / "manifest.json").read_text())
    assert manifest["tensors"]["a.bias"]["offset"] == 0
    assert manifest["tensors"]["b.weight"]["offset"] == 16
    assert manifest["tensors"]["b.weight"]["dtype"] == "float32"
