class MemeDataError(Exception):
    """Base meme data error."""


class DatasetNotFoundError(MemeDataError):
    """Raised when a split file or dataset root is missing."""


class RecordParseError(MemeDataError):
    """Raised when a record line cannot be parsed."""

    def __init__(self, path: str, line_number: int, reason: str) -> None:
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {reason}")


class LabelSchemeError(MemeDataError):
    """Raised when a raw label is outside the known label scheme."""


class ImageDecodeError(MemeDataError):
    """Raised when an image is missing or cannot be decoded."""


class InvalidArgumentError(MemeDataError, ValueError):
    """Raised when a data operation receives an out-of-range argument."""
