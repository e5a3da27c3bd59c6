from collections.abc import Sequence
from typing import Literal

import torch
from PIL import Image
from torch import nn

from components.app__backbone.ports import Backbone
from components.domain__encoding.entities import FeatureVector, PromptTemplate
from components.inversion__torch.phi import PhiNetwork
from components.inversion__torch.prompt import assemble_prompt, prompt_head_ids, prompt_tail_ids

PhiPlacement = Literal["input", "output"]


def pseudo_tokens(
    visual: torch.Tensor,
    phi: PhiNetwork,
    phi_proj: nn.Module | None = None,
    placement: PhiPlacement = "input",
) -> torch.Tensor:
    if phi_proj is None:
        return phi(visual)
    if placement == "input":
        return phi(phi_proj(visual))
    return phi_proj(phi(visual))


def encode_multimodal_batch(
    visual: torch.Tensor,
    tail_ids: Sequence[Sequence[int]],
    head_ids: Sequence[int],
    backbone: Backbone,
    phi: PhiNetwork,
    phi_proj: nn.Module | None = None,
    placement: PhiPlacement = "input",
) -> torch.Tensor:
    """Textual features of "<prefix> S*, <meme text>" for a batch of precomputed visual features."""
    pseudo = pseudo_tokens(visual, phi, phi_proj, placement)
    sequences = [assemble_prompt(pseudo[i], head_ids, tail_ids[i], backbone) for i in range(pseudo.shape[0])]
    return backbone.encode_token_embedding_batch(sequences)


def encode_multimodal_text(
    image: Image.Image,
    meme_text: str,
    backbone: Backbone,
    phi: PhiNetwork,
    template: PromptTemplate | None = None,
    phi_proj: nn.Module | None = None,
    placement: PhiPlacement = "input",
) -> FeatureVector:
    template = template or PromptTemplate()
    visual = backbone.encode_images([image])
    features = encode_multimodal_batch(
        visual,
        [prompt_tail_ids(backbone, template, meme_text)],
        prompt_head_ids(backbone, template),
        backbone,
        phi,
        phi_proj,
        placement,
    )
    return FeatureVector(values=features[0], modality="textual")
