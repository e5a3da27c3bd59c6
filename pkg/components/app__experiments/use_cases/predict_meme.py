from pathlib import Path
from typing import Literal

from PIL import Image

from components.app__evaluation.ports import MemeScorer
from components.domain__meme.entities import MemeRecord

Verdict = Literal["hateful", "not-hateful"]
THRESHOLD = 0.5


def predict_meme(scorer: MemeScorer, *, image: Path | Image.Image, text: str) -> tuple[float, Verdict]:
    record = MemeRecord(id="predict", image_ref=image, text=text, label=None)
    probability = scorer.score([record])[0]
    return probability, "hateful" if probability >= THRESHOLD else "not-hateful"
