import argparse
from pathlib import Path

from components.app__experiments.use_cases.load_run_splits import load_run_splits
from components.app__experiments.use_cases.run_ablation import run_ablation
from components.app__experiments.use_cases.run_baselines import run_baselines
from components.cli__argparse.commands.common import add_config_arguments, echo_config, resolve_config
from components.eval__reports.emitters import emit_table, format_number

EXTENSIONS = {"json": "json", "csv": "csv", "markdown": "md"}
RUNNERS = {"ablate": run_ablation, "baselines": run_baselines}


def register(subparsers: argparse._SubParsersAction) -> None:
    for command, description in (("ablate", "train and evaluate the four ablation rows"), ("baselines", "train and evaluate the feature baselines")):
        parser = subparsers.add_parser(command, help=description)
        add_config_arguments(parser)
        parser.add_argument("--out", type=Path, required=True)
        parser.add_argument("--format", choices=tuple(EXTENSIONS), default="csv")
        parser.set_defaults(handler=run, runner=command)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    echo_config(config)
    rows = RUNNERS[args.runner](config, load_run_splits(config), out_dir=args.out)
    path = emit_table(rows, args.format, args.out / f"table.{EXTENSIONS[args.format]}")
    for row in rows:
        print(f"method={row.method!r} accuracy={format_number(row.accuracy)} auroc={format_number(row.auroc)}")
    print(f"table={path}")
    return 0
