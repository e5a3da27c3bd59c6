from components.domain__encoding.entities import (
    BackboneMeta,
    FeatureVector,
    Modality,
    PromptTemplate,
    PseudoToken,
    TokenEmbeddingSequence,
)
from components.domain__encoding.errors import EncodingError, ShapeError, VocabularyError, WeightLoadError

__all__ = [
    "BackboneMeta",
    "EncodingError",
    "FeatureVector",
    "Modality",
    "PromptTemplate",
    "PseudoToken",
    "ShapeError",
    "TokenEmbeddingSequence",
    "VocabularyError",
    "WeightLoadError",
]
