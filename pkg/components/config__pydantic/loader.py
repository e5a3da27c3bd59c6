import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from components.config__pydantic.run_config import RunConfig
from components.domain__training.errors import RunConfigError


def parse_override(raw: str) -> tuple[list[str], Any]:
    key, sep, value = raw.partition("=")
    if not sep or not key.strip():
        raise RunConfigError(f"Override {raw!r} is not of the form section.key=value")
    try:
        parsed: Any = json.loads(value)
    except json.JSONDecodeError:
        parsed = value
    return key.strip().split("."), parsed


def apply_overrides(document: dict[str, Any], overrides: Sequence[str]) -> dict[str, Any]:
    for raw in overrides:
        path, value = parse_override(raw)
        node = document
        for part in path[:-1]:
            child = node.setdefault(part, {})
            if not isinstance(child, dict):
                raise RunConfigError(f"Override {raw!r}: {part} is not a section")
            node = child
        node[path[-1]] = value
    return document


def _format_validation_error(exc: ValidationError) -> str:
    return "; ".join(f"{'.'.join(str(p) for p in error['loc'])}: {error['msg']}" for error in exc.errors())


def build_run_config(document: dict[str, Any], overrides: Sequence[str] = ()) -> RunConfig:
    try:
        return RunConfig.model_validate(apply_overrides(document, overrides))
    except ValidationError as exc:
        raise RunConfigError(_format_validation_error(exc)) from exc


def load_run_config(path: Path | None, overrides: Sequence[str] = ()) -> RunConfig:
    document: dict[str, Any] = {}
    if path is not None:
        try:
            document = json.loads(Path(path).read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise RunConfigError(f"config: file {path} not found") from exc
        except json.JSONDecodeError as exc:
            raise RunConfigError(f"config: {path} is not valid JSON ({exc.msg} at line {exc.lineno})") from exc
        if not isinstance(document, dict):
            raise RunConfigError(f"config: {path} must contain a JSON object")
    return build_run_config(document, overrides)
