import argparse
from pathlib import Path

from components.backbone__open_clip.backbone import DEFAULT_ARCHITECTURE, convert_clip_weights
from components.inversion__torch.phi import convert_phi_weights


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("convert-weights", help="convert released weights into a tensor archive")
    parser.add_argument("--kind", choices=("clip", "phi"), required=True)
    parser.add_argument("--source", required=True, help="release file (or open_clip pretrained tag for clip)")
    parser.add_argument("--out", type=Path, required=True)
    parser.add_argument("--architecture", default=DEFAULT_ARCHITECTURE)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.kind == "clip":
        out = convert_clip_weights(args.source, args.out, architecture=args.architecture)
    else:
        out = convert_phi_weights(Path(args.source), args.out)
    print(f"archive={out}")
    return 0
