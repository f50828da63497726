from typing import Any, Dict

import numpy as np
from scipy import integrate

from ..entanglement import ConcurrenceSeries
from ..exceptions import SeriesError
from .base_analyzer import AnalysisContext, BaseAnalyzer
from .registry import AnalyzerRegistry


@AnalyzerRegistry.register('mean')
class MeanConcurrenceAnalyzer(BaseAnalyzer):
    """时间平均并发度 (梯形积分)"""

    name = 'mean'

    def _analyze(self, series: ConcurrenceSeries, context: AnalysisContext) -> Dict[str, Any]:
        if len(series) == 0:
            raise SeriesError("并发度序列为空")
        if len(series) == 1:
            mean = float(series.values[0])
        else:
            span = series.gts[-1] - series.gts[0]
            mean = float(integrate.trapezoid(series.values, series.gts) / span)
        return {
            'mean_concurrence': mean,
            'max_concurrence': float(np.max(series.values)),
            'min_concurrence': float(np.min(series.values)),
        }
