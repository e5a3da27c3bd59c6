from components.inversion__torch.multimodal import (
    PhiPlacement,
    encode_multimodal_batch,
    encode_multimodal_text,
    pseudo_tokens,
)
from components.inversion__torch.phi import PhiNetwork, convert_phi_weights, invert, load_phi
from components.inversion__torch.prompt import (
    assemble_prompt,
    build_prompt,
    prompt_head_ids,
    prompt_tail_ids,
    pseudo_slot_index,
)

__all__ = [
    "PhiNetwork",
    "PhiPlacement",
    "assemble_prompt",
    "build_prompt",
    "convert_phi_weights",
    "encode_multimodal_batch",
    "encode_multimodal_text",
    "invert",
    "load_phi",
    "prompt_head_ids",
    "prompt_tail_ids",
    "pseudo_slot_index",
    "pseudo_tokens",
]
