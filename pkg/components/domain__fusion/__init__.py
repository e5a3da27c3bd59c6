from components.domain__fusion.errors import ConfigurationError, FusionError

__all__ = ["ConfigurationError", "FusionError"]
