from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from utils.logger import Logger
from ..entanglement import ConcurrenceSeries, DEFAULT_MIN_WINDOW, DEFAULT_ZERO_THRESHOLD

logger = Logger.get_logger(__name__)


@dataclass(frozen=True)
class AnalysisContext:
    """分析参数"""

    zero_threshold: float = DEFAULT_ZERO_THRESHOLD
    min_window: float = DEFAULT_MIN_WINDOW
    refine: Optional[Callable[[float], float]] = None


class BaseAnalyzer:
    """分析器基类"""

    name = 'base'

    def analyze(self, series: ConcurrenceSeries, context: AnalysisContext) -> Dict[str, Any]:
        """执行分析"""
        try:
            results = self._analyze(series, context)
        except Exception as e:
            logger.error(f"分析器 {self.name} 执行失败: {str(e)}")
            raise
        self._print_results(results)
        return results

    def _analyze(self, series: ConcurrenceSeries, context: AnalysisContext) -> Dict[str, Any]:
        """
        执行分析并返回结果
        子类必须实现此方法
        """
        raise NotImplementedError("子类必须实现 _analyze 方法")

    def _print_results(self, results: Dict[str, Any]) -> None:
        for key, value in results.items():
            if key != 'report':
                logger.debug(f"{self.name}.{key}: {value}")
