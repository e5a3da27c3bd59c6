from abc import ABC, abstractmethod
from collections.abc import Sequence

from components.domain__meme.entities import MemeRecord


class MemeScorer(ABC):
    """Anything that turns memes into hatefulness probabilities."""

    config_hash: str = ""
    notes: list[str] = []

    @abstractmethod
    def score(self, records: Sequence[MemeRecord]) -> list[float]:
        """Return one probability per record, in input order."""
        raise NotImplementedError
