from .base_handler import ResultHandler
from .overview_handler import ConsoleHandler
from .detail_handler import DetailHandler

__all__ = [
    'ResultHandler',
    'ConsoleHandler',
    'DetailHandler',
]
