from components.app__experiments.use_cases.evaluate_checkpoint import evaluate_checkpoint
from components.app__experiments.use_cases.load_run_splits import RunSplits, load_run_splits
from components.app__experiments.use_cases.load_split import load_split
from components.app__experiments.use_cases.predict_meme import predict_meme
from components.app__experiments.use_cases.run_ablation import ABLATION_GRID, run_ablation
from components.app__experiments.use_cases.run_baselines import run_baselines
from components.app__experiments.use_cases.train_pipeline import PipelineResult, train_pipeline

__all__ = [
    "ABLATION_GRID",
    "PipelineResult",
    "RunSplits",
    "evaluate_checkpoint",
    "load_run_splits",
    "load_split",
    "predict_meme",
    "run_ablation",
    "run_baselines",
    "train_pipeline",
]
