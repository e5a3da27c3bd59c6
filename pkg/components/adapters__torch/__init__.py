from components.adapters__torch.projection import (
    InitScheme,
    Projection,
    ProjectionName,
    init_projection,
    project,
    set_frozen,
)

__all__ = ["InitScheme", "Projection", "ProjectionName", "init_projection", "project", "set_frozen"]
