"""Checkpoint persistence on top of the tensor archive.

Tensors are stored as ``<component>.<parameter>``; the manifest metadata
carries the architecture, per-component freeze flags and state hashes,
the backbone reference, the effective run config and the metric history.
"""

import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any

from bases.platform.hashing import state_hash
from bases.platform.tensor_archive import (
    ArchiveNotFoundError,
    TensorArchiveError,
    read_archive,
    write_archive,
)
from components.app__backbone.ports import Backbone
from components.app__backbone.use_cases.load_backbone import load_backbone
from components.domain__training.entities import Checkpoint, MetricEntry, Provenance
from components.domain__training.errors import CheckpointCorruptionError, CompatibilityError
from components.inversion__torch.phi import SEARLE_HIDDEN, PhiNetwork
from components.training__torch.models import FusionModel, ModelArchitecture, build_model

logger = logging.getLogger(__name__)


def checkpoint_from_model(model: FusionModel) -> Checkpoint:
    provenance = model.provenance
    tensors = {}
    components: dict[str, dict[str, Any]] = {}
    for component, module in sorted(model.components().items()):
        names = []
        for name, tensor in module.state_dict().items():
            tensors[f"{component}.{name}"] = tensor.detach().cpu()
            names.append(f"{component}.{name}")
        components[component] = {
            "tensors": sorted(names),
            "frozen": not any(parameter.requires_grad for parameter in module.parameters()),
            "state_sha256": state_hash(module),
        }
    manifest: dict[str, Any] = {
        "stage": provenance.stage,
        "architecture": model.architecture.to_dict(),
        "components": components,
        "carry_forward": list(provenance.carry_forward),
        "backbone": dict(provenance.backbone),
        "config": provenance.config,
        "config_hash": provenance.config_hash,
        "metric_history": [asdict(entry) for entry in provenance.metric_history],
        "run_stats": dict(provenance.run_stats),
    }
    if "phi" in components:
        manifest["phi"] = {"variant": model.phi.variant, "d": model.phi.d, "w": model.phi.w}
        if model.phi.variant == "searle":
            manifest["phi"]["hidden"] = model.phi.layers[0].out_features
    return Checkpoint(stage=provenance.stage, manifest=manifest, tensors=tensors)


def write_checkpoint(checkpoint: Checkpoint, path: Path) -> Checkpoint:
    write_archive(path, checkpoint.tensors, checkpoint.manifest)
    checkpoint.path = Path(path)
    logger.info("Wrote %s checkpoint to %s (config %s)", checkpoint.stage, path, checkpoint.config_hash[:12])
    return checkpoint


def save_checkpoint(model: FusionModel, path: Path) -> Checkpoint:
    return write_checkpoint(checkpoint_from_model(model), path)


def load_checkpoint(path: Path) -> Checkpoint:
    """Read and verify a checkpoint directory; any integrity failure is a corruption error."""
    try:
        archive = read_archive(path)
    except ArchiveNotFoundError as exc:
        raise CheckpointCorruptionError(f"Checkpoint {path} is incomplete: {exc}") from exc
    except TensorArchiveError as exc:
        raise CheckpointCorruptionError(str(exc)) from exc
    manifest = archive.metadata
    missing = [key for key in ("stage", "architecture", "components") if key not in manifest]
    if missing:
        raise CheckpointCorruptionError(f"Checkpoint {path} manifest lacks {', '.join(missing)}")
    listed = {name for entry in manifest["components"].values() for name in entry["tensors"]}
    if listed != set(archive.tensors):
        raise CheckpointCorruptionError(f"Checkpoint {path} manifest and tensors disagree")
    return Checkpoint(stage=manifest["stage"], manifest=manifest, tensors=archive.tensors, path=Path(path))


def provenance_from_manifest(manifest: dict[str, Any]) -> Provenance:
    return Provenance(
        stage=manifest["stage"],
        config=manifest.get("config", {}),
        config_hash=manifest.get("config_hash", ""),
        backbone=manifest.get("backbone", {}),
        metric_history=[MetricEntry(**entry) for entry in manifest.get("metric_history", [])],
        run_stats=manifest.get("run_stats", {}),
        carry_forward=manifest.get("carry_forward", []),
    )


def backbone_for(checkpoint: Checkpoint, backbone: Backbone | None = None) -> Backbone:
    """Return a backbone matching the one the checkpoint was trained against."""
    reference = checkpoint.manifest.get("backbone", {})
    if backbone is None:
        backbone = load_backbone(
            reference.get("kind", "mock"),
            reference.get("source"),
            seed=int(reference.get("seed", 0)),
            device=checkpoint.manifest.get("config", {}).get("device", "cpu"),
        )
    expected = reference.get("state_sha256")
    if expected and backbone.state_hash() != expected:
        raise CompatibilityError(f"Backbone {backbone.meta.name} does not match the checkpoint's backbone hash")
    return backbone


def restore_model(checkpoint: Checkpoint, backbone: Backbone | None = None) -> FusionModel:
    """Rebuild the model a checkpoint was saved from, with identical weights and freeze flags."""
    architecture = ModelArchitecture.from_dict(checkpoint.manifest["architecture"])
    phi = None
    if "phi" in checkpoint.manifest:
        meta = checkpoint.manifest["phi"]
        if meta["variant"] == "searle":
            phi = PhiNetwork.searle(meta["d"], meta["w"], hidden=meta.get("hidden", SEARLE_HIDDEN))
        else:
            phi = PhiNetwork.stub(meta["d"], meta["w"], scheme="zero")
        phi.variant = meta["variant"]
    if architecture.use_textual_inversion and architecture.kind == "issues":
        backbone = backbone_for(checkpoint, backbone)
    model = build_model(architecture, backbone=backbone, phi=phi)
    components = model.components()
    if set(components) != set(checkpoint.manifest["components"]):
        raise CompatibilityError(
            f"Checkpoint components {sorted(checkpoint.manifest['components'])} do not match model {sorted(components)}"
        )
    for name, module in components.items():
        module.load_state_dict(checkpoint.component_state(name), strict=True)
        module.requires_grad_(not checkpoint.manifest["components"][name]["frozen"])
    model.provenance = provenance_from_manifest(checkpoint.manifest)
    model.eval()
    return model
