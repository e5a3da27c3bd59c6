from components.app__backbone.ports import Backbone

__all__ = ["Backbone"]
