from typing import Any, Dict, Optional

from utils.logger import Logger
from ..entanglement import ConcurrenceSeries
from .base_analyzer import AnalysisContext
from .registry import AnalyzerRegistry

logger = Logger.get_logger(__name__)


class AnalyzerChainBuilder:
    """分析器链构建器"""

    @classmethod
    def setup_analyzers(cls, analyzers: Optional[Dict[str, bool]] = None) -> Dict[str, bool]:
        """配置分析器启用状态，None 表示全部启用"""
        if analyzers is None:
            analyzers = {name: True for name in AnalyzerRegistry.names()}

        for name, enabled in analyzers.items():
            if enabled:
                AnalyzerRegistry.enable(name)
            else:
                AnalyzerRegistry.disable(name)

        return analyzers

    @classmethod
    def run(cls, series: ConcurrenceSeries, context: AnalysisContext) -> Dict[str, Dict[str, Any]]:
        """依次运行已启用的分析器"""
        results = {}
        for name, info in AnalyzerRegistry.get_enabled_analyzers().items():
            results[name] = info['class']().analyze(series, context)
            logger.debug(f"分析器 {name} 完成")
        return results
