from .result_collector import ResultCollector
from .handlers import ResultHandler, ConsoleHandler, DetailHandler
from . import csv_io

__all__ = [
    'ResultCollector',
    'ResultHandler',
    'ConsoleHandler',
    'DetailHandler',
    'csv_io',
]
