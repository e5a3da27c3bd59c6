class EvaluationError(Exception):
    """Base evaluation error."""


class EmptyInputError(EvaluationError, ValueError):
    """Raised when a metric receives no samples or mismatched lengths."""


class UndefinedMetricError(EvaluationError, ValueError):
    """Raised when AUROC is requested for single-class labels."""


class UnlabeledSplitError(EvaluationError, ValueError):
    """Raised when evaluation is asked to score a split without labels."""
