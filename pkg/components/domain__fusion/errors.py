class FusionError(Exception):
    """Base fusion error."""


class ConfigurationError(FusionError, ValueError):
    """Raised when a fusion mode is missing the modality it needs."""
