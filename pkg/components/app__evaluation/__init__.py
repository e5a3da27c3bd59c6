from components.app__evaluation.ports import MemeScorer

__all__ = ["MemeScorer"]
