import json
from datetime import datetime, timezone
from pathlib import Path
from typing import IO

from components.domain__training.entities import TrainingStage


class RunLog:
    """Line-delimited JSON training events: {step, stage, loss, lr, timestamp}."""

    def __init__(self, path: Path | None = None) -> None:
        self.path = Path(path) if path is not None else None
        self._handle: IO[str] | None = None

    def __enter__(self) -> "RunLog":
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._handle = self.path.open("a", encoding="utf-8")
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()

    def close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None

    def record(self, *, step: int, stage: TrainingStage, loss: float, lr: float) -> None:
        if self._handle is None:
            return
        event = {
            "step": step,
            "stage": stage,
            "loss": loss,
            "lr": lr,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        self._handle.write(json.dumps(event, sort_keys=True) + "\n")
        self._handle.flush()
