from components.app__backbone.use_cases.load_backbone import BackboneKind, load_backbone

__all__ = ["BackboneKind", "load_backbone"]
