from functools import lru_cache
from pathlib import Path
import os


class Settings:
    cache_dir: Path
    seed: int

    def __init__(self) -> None:
        self.cache_dir = Path(os.getenv("MEMEFUSION_CACHE", str(Path.home() / ".cache" / "memefusion"))).expanduser()
        raw_seed = os.getenv("MEMEFUSION_SEED", "0").strip()
        self.seed = int(raw_seed) if raw_seed.lstrip("-").isdigit() else 0

    def resolve_artifact(self, source: str | None) -> Path | None:
        """Resolve a weight archive reference, falling back to the cache directory for bare names."""
        if source is None:
            return None
        path = Path(source).expanduser()
        if path.exists() or path.is_absolute():
            return path
        cached = self.cache_dir / source
        return cached if cached.exists() else path


@lru_cache
def get_settings() -> Settings:
    return Settings()
