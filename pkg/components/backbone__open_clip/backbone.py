import importlib.util
from collections.abc import Sequence
from pathlib import Path

import torch
from PIL import Image
from torch import nn

from bases.platform.tensor_archive import TensorArchiveError, read_archive, write_archive
from components.app__backbone.ports import Backbone
from components.domain__encoding.entities import BackboneMeta
from components.domain__encoding.errors import WeightLoadError

HAS_OPEN_CLIP = importlib.util.find_spec("open_clip") is not None
if HAS_OPEN_CLIP:
    import open_clip
    from open_clip.tokenizer import SimpleTokenizer

DEFAULT_ARCHITECTURE = "ViT-L-14"


def _require_open_clip() -> None:
    if not HAS_OPEN_CLIP:
        raise WeightLoadError("open_clip is not installed; the pretrained backbone is unavailable")


class OpenClipBackbone(Backbone):
    def __init__(self, model: nn.Module, architecture: str, device: str = "cpu") -> None:
        super().__init__()
        _require_open_clip()
        self._model = model.to(device).eval().requires_grad_(False)
        self.device = device
        self.tokenizer = SimpleTokenizer()
        self.sot_id = self.tokenizer.encoder["<start_of_text>"]
        self.eot_id = self.tokenizer.encoder["<end_of_text>"]
        self.preprocess = open_clip.image_transform(model.visual.image_size, is_train=False)
        projection = model.text_projection
        d = projection.out_features if isinstance(projection, nn.Linear) else projection.shape[1]
        self.meta = BackboneMeta(
            d=int(d),
            w=int(model.token_embedding.embedding_dim),
            context_len=int(model.context_length),
            name=architecture,
            vocab_size=int(model.token_embedding.num_embeddings),
        )

    @property
    def module(self) -> nn.Module:
        return self._model

    def encode_images(self, images: Sequence[Image.Image]) -> torch.Tensor:
        pixels = torch.stack([self.preprocess(image.convert("RGB")) for image in images]).to(self.device)
        with torch.no_grad():
            return self._model.encode_image(pixels).float().cpu()

    def content_ids(self, text: str) -> list[int]:
        return list(self.tokenizer.encode(text))

    def lookup(self, ids: torch.Tensor) -> torch.Tensor:
        return self._model.token_embedding(ids.to(self.device)).cpu()

    def padding_row(self) -> torch.Tensor:
        return self._model.token_embedding.weight[0].detach().cpu()

    def encode_padded(self, embeddings: torch.Tensor, lengths: torch.Tensor, eot_index: torch.Tensor) -> torch.Tensor:
        model = self._model
        x = embeddings.to(self.device) + model.positional_embedding[: embeddings.shape[1]]
        batch_first = getattr(model.transformer, "batch_first", False)
        if not batch_first:
            x = x.permute(1, 0, 2)
        x = model.transformer(x, attn_mask=model.attn_mask)
        if not batch_first:
            x = x.permute(1, 0, 2)
        x = model.ln_final(x)
        pooled = x[torch.arange(x.shape[0]), eot_index.to(self.device)]
        projection = model.text_projection
        features = projection(pooled) if isinstance(projection, nn.Module) else pooled @ projection
        return features.cpu()


def load_open_clip_backbone(archive_dir: Path, device: str = "cpu") -> OpenClipBackbone:
    _require_open_clip()
    try:
        archive = read_archive(archive_dir)
    except TensorArchiveError as exc:
        raise WeightLoadError(f"Cannot load encoder weights from {archive_dir}: {exc}") from exc
    architecture = str(archive.metadata.get("architecture", DEFAULT_ARCHITECTURE))
    model = open_clip.create_model(architecture, pretrained=None)
    expected = set(model.state_dict())
    provided = set(archive.tensors)
    missing, unexpected = sorted(expected - provided), sorted(provided - expected)
    if missing or unexpected:
        raise WeightLoadError(
            f"Archive {archive_dir} does not match {architecture}: missing={missing[:10]} unexpected={unexpected[:10]}"
        )
    model.load_state_dict(archive.tensors, strict=True)
    return OpenClipBackbone(model=model, architecture=architecture, device=device)


def convert_clip_weights(source: str, out_dir: Path, architecture: str = DEFAULT_ARCHITECTURE) -> Path:
    """Write an open_clip/OpenAI release (file path or pretrained tag) as a tensor archive."""
    _require_open_clip()
    try:
        model = open_clip.create_model(architecture, pretrained=source)
    except Exception as exc:  # open_clip raises RuntimeError, zipfile and pickle errors alike
        raise WeightLoadError(f"Cannot read CLIP release {source}: {exc}") from exc
    tensors = {name: tensor.float() for name, tensor in model.state_dict().items()}
    return write_archive(out_dir, tensors, {"kind": "clip", "architecture": architecture, "source": str(source)})
