from components.eval__metrics.evaluate import evaluate
from components.eval__metrics.metrics import accuracy, auroc, roc_curve, trapezoid_area

__all__ = ["accuracy", "auroc", "evaluate", "roc_curve", "trapezoid_area"]
