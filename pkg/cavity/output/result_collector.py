from typing import Any, Dict, List, TYPE_CHECKING

from utils.event_bus import EventBus
from utils.logger import Logger

if TYPE_CHECKING:
    from ..dynamics import WStateSpec
    from ..kernels import MiddleTermReading
    from ..runner import SeriesResult, SweepRow, ValidationEntry

logger = Logger.get_logger(__name__)


class ResultCollector:
    """计算结果收集器，通过事件总线分发给输出处理器"""

    @staticmethod
    def _describe_spec(spec: 'WStateSpec') -> Dict[str, Any]:
        return {
            'family': spec.family.value,
            'a': spec.a,
            'b': spec.b,
            'c': spec.c,
        }

    @classmethod
    def collect_series(cls, result: 'SeriesResult') -> Dict[str, Any]:
        """收集单条时间序列的摘要"""
        esd = result.analysis.get('esd', {})
        mean = result.analysis.get('mean', {})
        summary = {
            **cls._describe_spec(result.spec),
            'alpha': result.alpha,
            'points': len(result.series),
            'gt_max': float(result.series.gts[-1]),
            'n_windows': esd.get('n_windows'),
            'total_dark_time': esd.get('total_dark_time'),
            'first_death': esd.get('first_death'),
            'windows': esd.get('windows', []),
            'mean_concurrence': mean.get('mean_concurrence'),
            'max_concurrence': mean.get('max_concurrence'),
        }
        EventBus.get_instance().publish('series_result', summary)
        return summary

    @classmethod
    def collect_sweep(cls, spec: 'WStateSpec', rows: List['SweepRow']) -> Dict[str, Any]:
        """收集 α 扫描结果"""
        event_bus = EventBus.get_instance()
        for row in rows:
            event_bus.publish('sweep_row', {
                'alpha': row.alpha,
                'n_windows': row.n_windows,
                'total_dark_time': row.total_dark_time,
                'mean_concurrence': row.mean_concurrence,
            })

        # ESD 消失的最小 α (之后的所有 α 都没有死亡窗口)
        threshold = None
        for row in reversed(rows):
            if row.n_windows:
                break
            threshold = row.alpha

        summary = {
            'kind': 'sweep',
            **cls._describe_spec(spec),
            'rows': len(rows),
            'esd_free_from_alpha': threshold,
        }
        event_bus.publish('final_result', summary)
        return summary

    @classmethod
    def collect_validation(cls, entries: List['ValidationEntry'],
                           reading: 'MiddleTermReading') -> Dict[str, Any]:
        """收集解析解验证结果"""
        event_bus = EventBus.get_instance()
        for entry in entries:
            event_bus.publish('validation_result', {
                'family': entry.family.value,
                'alpha': entry.alpha,
                'deviation': entry.deviation,
                'passed': entry.passed,
            })

        failed = [e for e in entries if not e.passed]
        summary = {
            'kind': 'validation',
            'reading': reading.value,
            'checks': len(entries),
            'failed': len(failed),
            'max_deviation': max((e.deviation for e in entries), default=0.0),
            'success': not failed,
        }
        event_bus.publish('final_result', summary)
        if failed:
            event_bus.publish('error', f"{len(failed)} 项解析解验证未通过 (读法 {reading.value})")
        return summary
