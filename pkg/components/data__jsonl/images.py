from pathlib import Path

from PIL import Image, UnidentifiedImageError

from components.data__synthetic.generator import render_synthetic_image
from components.domain__meme.entities import ImageRef, SyntheticImage
from components.domain__meme.errors import ImageDecodeError


def load_image(ref: ImageRef | Image.Image) -> Image.Image:
    if isinstance(ref, Image.Image):
        return ref.convert("RGB")
    if isinstance(ref, SyntheticImage):
        return render_synthetic_image(ref)
    path = Path(ref)
    if not path.is_file():
        raise ImageDecodeError(f"Image file not found: {path}")
    try:
        with Image.open(path) as image:
            return image.convert("RGB")
    except (UnidentifiedImageError, OSError) as exc:
        raise ImageDecodeError(f"Cannot decode image {path}: {exc}") from exc
