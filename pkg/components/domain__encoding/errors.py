class EncodingError(Exception):
    """Base encoder error."""


class ShapeError(EncodingError, ValueError):
    """Raised when a tensor does not have the dimensions the encoder contract requires."""


class VocabularyError(EncodingError, ValueError):
    """Raised when a token id is outside the vocabulary."""


class WeightLoadError(EncodingError):
    """Raised when a weight archive is missing, corrupt or does not match the architecture."""
