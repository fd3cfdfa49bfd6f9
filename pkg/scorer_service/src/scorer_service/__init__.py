from .app import create_app
from .models import ModelHandle, ScorerBackend, UnsupportedMode

__all__ = ["ModelHandle", "ScorerBackend", "UnsupportedMode", "create_app"]
