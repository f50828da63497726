from .registry import AnalyzerRegistry
from .base_analyzer import AnalysisContext, BaseAnalyzer
from .esd_analyzer import EsdAnalyzer
from .mean_analyzer import MeanConcurrenceAnalyzer
from .analyzer_chain import AnalyzerChainBuilder

__all__ = [
    'AnalyzerRegistry',
    'AnalysisContext',
    'BaseAnalyzer',
    'EsdAnalyzer',
    'MeanConcurrenceAnalyzer',
    'AnalyzerChainBuilder',
]
