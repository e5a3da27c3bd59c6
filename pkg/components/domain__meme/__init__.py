from components.domain__meme.entities import (
    DatasetSource,
    DatasetSplit,
    ImageRef,
    MemeRecord,
    SplitName,
    SyntheticImage,
    SyntheticMemeSpec,
)
from components.domain__meme.errors import (
    DatasetNotFoundError,
    ImageDecodeError,
    InvalidArgumentError,
    LabelSchemeError,
    MemeDataError,
    RecordParseError,
)

__all__ = [
    "DatasetSource",
    "DatasetSplit",
    "DatasetNotFoundError",
    "ImageDecodeError",
    "ImageRef",
    "InvalidArgumentError",
    "LabelSchemeError",
    "MemeDataError",
    "MemeRecord",
    "RecordParseError",
    "SplitName",
    "SyntheticImage",
    "SyntheticMemeSpec",
]
