import argparse
from pathlib import Path

from components.data__synthetic.generator import generate_synthetic_confounders, split_synthetic, write_synthetic_dataset


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("synth", help="write a synthetic confounder dataset in the HMC layout")
    parser.add_argument("--n", type=int, default=1024)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=Path, required=True)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    splits = split_synthetic(generate_synthetic_confounders(args.n, args.seed))
    write_synthetic_dataset(splits, args.out)
    print(f"seed={args.seed}")
    for name, split in sorted(splits.items()):
        print(f"{name}={len(split)}")
    print(f"out={args.out}")
    return 0
