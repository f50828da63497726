from typing import Any, Dict

from ..entanglement import ConcurrenceSeries, scan_esd
from .base_analyzer import AnalysisContext, BaseAnalyzer
from .registry import AnalyzerRegistry


@AnalyzerRegistry.register('esd')
class EsdAnalyzer(BaseAnalyzer):
    """纠缠突然死亡窗口分析器"""

    name = 'esd'

    def _analyze(self, series: ConcurrenceSeries, context: AnalysisContext) -> Dict[str, Any]:
        report = scan_esd(series, context.zero_threshold, context.min_window, context.refine)
        return {
            'n_windows': report.n_windows,
            'total_dark_time': report.total_dark_time,
            'first_death': report.first_death,
            'windows': list(report.windows),
            'report': report,
        }
