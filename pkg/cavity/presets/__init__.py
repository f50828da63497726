from .registry import PresetRegistry
from .builtin import DEFAULT_PRESETS

__all__ = [
    'PresetRegistry',
    'DEFAULT_PRESETS',
]
