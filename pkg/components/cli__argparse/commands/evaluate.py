import argparse
from pathlib import Path

from components.app__experiments.use_cases.evaluate_checkpoint import evaluate_checkpoint
from components.app__experiments.use_cases.load_split import load_split
from components.config__pydantic.loader import build_run_config
from components.eval__reports.emitters import emit_report, summary_lines
from components.training__torch.checkpoint import load_checkpoint

EXTENSIONS = {"json": "json", "csv": "csv", "markdown": "md"}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("eval", help="evaluate a checkpoint on a labeled split")
    parser.add_argument("--checkpoint", type=Path, required=True)
    parser.add_argument("--split", choices=("train", "dev_seen", "test_unseen", "test"), default=None, help="defaults to the config's evaluation split")
    parser.add_argument("--format", choices=tuple(EXTENSIONS), default="json")
    parser.add_argument("--out", type=Path, default=None)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    checkpoint = load_checkpoint(args.checkpoint)
    config = build_run_config(checkpoint.manifest.get("config", {}))
    config.validate_paths()
    split = load_split(config, args.split or config.data.eval_split)
    report = evaluate_checkpoint(checkpoint, split)
    out = args.out or args.checkpoint / f"report_{split.name}.{EXTENSIONS[args.format]}"
    emit_report(report, args.format, out)
    for line in summary_lines(report):
        print(line)
    print(f"report={out}")
    return 0
