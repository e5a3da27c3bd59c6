import logging
from collections.abc import Sequence

import torch

from components.app__backbone.ports import Backbone
from components.domain__encoding.entities import PromptTemplate, PseudoToken, TokenEmbeddingSequence
from components.domain__encoding.errors import ShapeError

logger = logging.getLogger(__name__)


def prompt_head_ids(backbone: Backbone, template: PromptTemplate) -> list[int]:
    """Start marker plus prefix tokens; the pseudo slot follows immediately."""
    prefix = backbone.content_ids(template.prefix)
    if not prefix:
        raise ShapeError(f"Prompt prefix {template.prefix!r} produces no tokens")
    head = [backbone.sot_id, *prefix]
    if len(head) + 2 > backbone.meta.context_len:
        raise ShapeError(f"Prompt prefix {template.prefix!r} leaves no room in context {backbone.meta.context_len}")
    return head


def pseudo_slot_index(backbone: Backbone, template: PromptTemplate) -> int:
    return len(prompt_head_ids(backbone, template))


def prompt_tail_ids(backbone: Backbone, template: PromptTemplate, meme_text: str) -> list[int]:
    """Separator and meme-text tokens plus end marker; only this tail is ever truncated."""
    tail = backbone.content_ids(template.separator + meme_text) if meme_text.strip() else []
    room = backbone.meta.context_len - len(prompt_head_ids(backbone, template)) - 2
    if len(tail) > room:
        tail = tail[:room]
        backbone.truncations += 1
    return [*tail, backbone.eot_id]


def assemble_prompt(
    pseudo: torch.Tensor,
    head_ids: Sequence[int],
    tail_ids: Sequence[int],
    backbone: Backbone,
) -> TokenEmbeddingSequence:
    if pseudo.shape != (backbone.meta.w,):
        raise ShapeError(f"Pseudo token must have shape ({backbone.meta.w},), got {tuple(pseudo.shape)}")
    head = backbone.lookup(torch.tensor(list(head_ids), dtype=torch.long))
    tail = backbone.lookup(torch.tensor(list(tail_ids), dtype=torch.long))
    embeddings = torch.cat([head.to(pseudo.dtype), pseudo.unsqueeze(0), tail.to(pseudo.dtype)], dim=0)
    length = embeddings.shape[0]
    return TokenEmbeddingSequence(embeddings=embeddings, length=length, eot_index=length - 1, pseudo_index=len(head_ids))


def build_prompt(
    pseudo: PseudoToken | torch.Tensor,
    meme_text: str,
    template: PromptTemplate,
    backbone: Backbone,
) -> TokenEmbeddingSequence:
    values = pseudo.values if isinstance(pseudo, PseudoToken) else pseudo
    return assemble_prompt(
        values,
        prompt_head_ids(backbone, template),
        prompt_tail_ids(backbone, template, meme_text),
        backbone,
    )
