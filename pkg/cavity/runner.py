"""计算流程编排: 时间序列、α 扫描、解析解验证、图数据"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Sequence

import numpy as np

from utils.logger import Logger
from .analyzers import AnalysisContext, AnalyzerChainBuilder
from .dynamics import AmplitudeVector, Family, WStateSpec, evolve_grid
from .entanglement import (
    ConcurrenceSeries, DEFAULT_MIN_WINDOW, DEFAULT_ZERO_THRESHOLD, EsdReport,
    concurrence_at, concurrence_xstate, reduced_density,
)
from .exceptions import ParameterError
from .kernels import MiddleTermReading
from .oracle import validate_analytic
from .output.result_collector import ResultCollector

logger = Logger.get_logger(__name__)

VALIDATION_TOLERANCE = 1e-10


def uniform_grid(gt_max: float, steps: int) -> np.ndarray:
    """[0, gt_max] 上 steps 个等距点"""
    if not gt_max > 0:
        raise ParameterError(f"gt_max 必须为正: {gt_max}")
    if isinstance(steps, bool) or int(steps) != steps or steps < 1:
        raise ParameterError(f"steps 必须是正整数: {steps}")
    return np.linspace(0.0, float(gt_max), int(steps))


@dataclass
class SeriesResult:
    """一条并发度时间序列及其分析结果"""

    spec: WStateSpec
    alpha: float
    series: ConcurrenceSeries
    amplitudes: List[AmplitudeVector]
    analysis: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    @property
    def esd(self) -> EsdReport:
        return self.analysis['esd']['report']

    @property
    def mean_concurrence(self) -> float:
        return self.analysis['mean']['mean_concurrence']

    def populations(self) -> np.ndarray:
        """每个采样点上 ρ_A 的对角元，形状 (N, 4)"""
        return np.array([reduced_density(x).populations for x in self.amplitudes])


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    n_windows: int
    total_dark_time: float
    mean_concurrence: float


@dataclass(frozen=True)
class ValidationEntry:
    family: Family
    alpha: float
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def run_series(spec: WStateSpec, alpha: float, gts: Sequence[float],
               zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
               min_window: float = DEFAULT_MIN_WINDOW,
               publish: bool = True) -> SeriesResult:
    """计算一条时间序列并运行分析器链"""
    amplitudes = evolve_grid(spec, alpha, gts)
    series = ConcurrenceSeries(np.asarray(gts, dtype=float),
                               np.array([concurrence_xstate(x) for x in amplitudes]))

    context = AnalysisContext(zero_threshold, min_window, concurrence_at(spec, alpha))
    result = SeriesResult(spec, float(alpha), series, amplitudes,
                          AnalyzerChainBuilder.run(series, context))
    if publish:
        ResultCollector.collect_series(result)
    return result


def run_sweep(spec: WStateSpec, alphas: Iterable[float], gts: Sequence[float],
              zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
              min_window: float = DEFAULT_MIN_WINDOW) -> List[SweepRow]:
    """对每个 α 统计死亡窗口与平均并发度"""
    alphas = [float(alpha) for alpha in alphas]
    if not alphas:
        raise ParameterError("α 列表不能为空")

    rows = []
    for alpha in alphas:
        result = run_series(spec, alpha, gts, zero_threshold, min_window, publish=False)
        rows.append(SweepRow(alpha, result.esd.n_windows, result.esd.total_dark_time,
                             result.mean_concurrence))
    ResultCollector.collect_sweep(spec, rows)
    return rows


def run_validation(families: Iterable, alphas: Iterable[float], grid: Sequence[float],
                   tolerance: float = VALIDATION_TOLERANCE,
                   reading: MiddleTermReading = MiddleTermReading.DERIVED) -> List[ValidationEntry]:
    """逐 (初态族, α) 比较解析块矩阵与数值基准"""
    families = [Family.parse(f) for f in families]
    alphas = [float(alpha) for alpha in alphas]
    if not families:
        raise ParameterError("初态族列表不能为空")
    if not alphas:
        raise ParameterError("α 列表不能为空")

    entries = [
        ValidationEntry(family, alpha, validate_analytic(family, alpha, grid, reading), tolerance)
        for family in families
        for alpha in alphas
    ]
    ResultCollector.collect_validation(entries, reading)
    return entries


def run_figure(spec: WStateSpec, alphas: Iterable[float], gts: Sequence[float],
               zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
               min_window: float = DEFAULT_MIN_WINDOW) -> Dict[float, SeriesResult]:
    """同一初态在若干 α 下的曲线，对应一幅图"""
    alphas = [float(alpha) for alpha in alphas]
    if not alphas:
        raise ParameterError("α 列表不能为空")
    return {alpha: run_series(spec, alpha, gts, zero_threshold, min_window) for alpha in alphas}
