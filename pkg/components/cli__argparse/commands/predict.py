import argparse
from pathlib import Path

from components.app__experiments.use_cases.predict_meme import predict_meme
from components.eval__reports.emitters import format_number
from components.training__torch.scoring import TrainedScorer


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("predict", help="score one image and caption")
    parser.add_argument("--checkpoint", type=Path, required=True)
    parser.add_argument("--image", type=Path, required=True)
    parser.add_argument("--text", default="")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    probability, verdict = predict_meme(TrainedScorer.from_path(args.checkpoint), image=args.image, text=args.text)
    print(f"score={format_number(probability)} verdict={verdict}")
    return 0
