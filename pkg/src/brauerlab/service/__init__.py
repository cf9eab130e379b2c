from . import handlers, models, registry

__all__ = ["handlers", "models", "registry"]
