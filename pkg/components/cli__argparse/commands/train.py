import argparse
from pathlib import Path

from components.app__experiments.use_cases.load_run_splits import load_run_splits
from components.app__experiments.use_cases.train_pipeline import STAGE1_DIR, train_pipeline
from components.cli__argparse.commands.common import add_config_arguments, echo_config, resolve_config
from components.domain__training.errors import CompatibilityError
from components.training__torch.checkpoint import load_checkpoint


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("train", help="train stage 1, stage 2 or both")
    add_config_arguments(parser)
    parser.add_argument("--stage", choices=("1", "2", "all"), default="all")
    parser.add_argument("--out", type=Path, required=True)
    parser.add_argument("--stage1-checkpoint", type=Path, default=None, help="stage-1 checkpoint for --stage 2")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    echo_config(config)
    stage1 = None
    if args.stage == "2" and config.ablation.use_two_stage:
        source = args.stage1_checkpoint or args.out / STAGE1_DIR
        if not source.exists():
            raise CompatibilityError(f"--stage 2 needs a stage-1 checkpoint; {source} does not exist")
        stage1 = load_checkpoint(source)
    result = train_pipeline(config, load_run_splits(config), out_dir=args.out, stage=args.stage, stage1=stage1)
    for name, checkpoint in (("stage1", result.stage1), ("full", result.full)):
        if checkpoint is not None and checkpoint.path is not None:
            print(f"{name}_checkpoint={checkpoint.path}")
    return 0
