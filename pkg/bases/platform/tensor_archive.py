"""Directory archive of named float32 tensors.

Layout::

    <dir>/manifest.json   tensor name -> shape, dtype, byte offset, sha256, plus free-form metadata
    <dir>/tensors.bin     little-endian float32 payloads, concatenated in sorted name order

The same layout carries pretrained encoder weights, inversion weights and
training checkpoints.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import torch

from bases.platform.hashing import sha256_bytes

ARCHIVE_FORMAT = "memefusion-tensors/1"
MANIFEST_NAME = "manifest.json"
BLOB_NAME = "tensors.bin"


class TensorArchiveError(Exception):
    """Base tensor archive error."""


class ArchiveNotFoundError(TensorArchiveError):
    """Raised when the archive directory or one of its files is missing."""


class ArchiveIntegrityError(TensorArchiveError):
    """Raised when the blob does not match what the manifest declares."""

    def __init__(self, message: str, problems: list[str] | None = None) -> None:
        self.problems = problems or []
        detail = "; ".join(self.problems[:10])
        super().__init__(f"{message}: {detail}" if detail else message)


@dataclass
class TensorArchive:
    tensors: dict[str, torch.Tensor]
    metadata: dict[str, Any] = field(default_factory=dict)
    blob_sha256: str = ""


def _to_le_float32(tensor: torch.Tensor) -> bytes:
    array = tensor.detach().to("cpu", torch.float32).contiguous().numpy()
    return array.astype("<f4", copy=False).tobytes()


def encode_archive(tensors: dict[str, torch.Tensor], metadata: dict[str, Any]) -> tuple[bytes, bytes]:
    """Return (manifest bytes, blob bytes); output depends only on the inputs."""
    entries: dict[str, dict[str, Any]] = {}
    chunks: list[bytes] = []
    offset = 0
    for name in sorted(tensors):
        payload = _to_le_float32(tensors[name])
        entries[name] = {
            "shape": list(tensors[name].shape),
            "dtype": "float32",
            "offset": offset,
            "nbytes": len(payload),
            "sha256": sha256_bytes(payload),
        }
        chunks.append(payload)
        offset += len(payload)
    blob = b"".join(chunks)
    manifest = {
        "format": ARCHIVE_FORMAT,
        "blob_sha256": sha256_bytes(blob),
        "metadata": metadata,
        "tensors": entries,
    }
    manifest_bytes = (json.dumps(manifest, sort_keys=True, indent=2) + "\n").encode("utf-8")
    return manifest_bytes, blob


def write_archive(directory: Path, tensors: dict[str, torch.Tensor], metadata: dict[str, Any]) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    manifest_bytes, blob = encode_archive(tensors, metadata)
    (directory / BLOB_NAME).write_bytes(blob)
    (directory / MANIFEST_NAME).write_bytes(manifest_bytes)
    return directory


def read_manifest(directory: Path) -> dict[str, Any]:
    manifest_path = Path(directory) / MANIFEST_NAME
    if not manifest_path.is_file():
        raise ArchiveNotFoundError(f"No {MANIFEST_NAME} under {directory}")
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ArchiveIntegrityError(f"Unreadable manifest {manifest_path}", [str(exc)]) from exc
    if manifest.get("format") != ARCHIVE_FORMAT or not isinstance(manifest.get("tensors"), dict):
        raise ArchiveIntegrityError(f"Unsupported manifest format in {manifest_path}", [str(manifest.get("format"))])
    return manifest


def read_archive(directory: Path) -> TensorArchive:
    directory = Path(directory)
    manifest = read_manifest(directory)
    blob_path = directory / BLOB_NAME
    if not blob_path.is_file():
        raise ArchiveNotFoundError(f"No {BLOB_NAME} under {directory}")
    blob = blob_path.read_bytes()

    problems: list[str] = []
    tensors: dict[str, torch.Tensor] = {}
    for name, entry in sorted(manifest["tensors"].items()):
        start, nbytes = int(entry["offset"]), int(entry["nbytes"])
        if start + nbytes > len(blob):
            problems.append(f"{name}: expected bytes [{start}, {start + nbytes}) but blob has {len(blob)}")
            continue
        payload = blob[start : start + nbytes]
        if sha256_bytes(payload) != entry["sha256"]:
            problems.append(f"{name}: sha256 mismatch")
            continue
        array = np.frombuffer(payload, dtype="<f4").astype(np.float32).reshape(entry["shape"])
        tensors[name] = torch.from_numpy(array.copy())

    if sha256_bytes(blob) != manifest.get("blob_sha256"):
        problems.append("blob: sha256 mismatch")
    if problems:
        raise ArchiveIntegrityError(f"Tensor archive {directory} failed verification", problems)
    return TensorArchive(tensors=tensors, metadata=manifest.get("metadata", {}), blob_sha256=manifest["blob_sha256"])
