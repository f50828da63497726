from typing import Any, Dict

from utils.logger import Logger
from .base_handler import ResultHandler

logger = Logger.get_logger(__name__)


class DetailHandler(ResultHandler):
    """详细信息处理器"""

    def _register_handlers(self) -> None:
        self.subscribe('series_result', self.handle_series_result)
        self.subscribe('sweep_row', self.handle_sweep_row)
        self.subscribe('validation_result', self.handle_validation_result)

    def handle_series_result(self, result: Dict[str, Any]) -> None:
        """逐个输出死亡窗口"""
        for start, end in result.get('windows', []):
            logger.debug(f"α={result['alpha']:g} 死亡窗口: [{start:.6f}, {end:.6f}], "
                         f"时长 {end - start:.6f}")

    def handle_sweep_row(self, row: Dict[str, Any]) -> None:
        logger.debug(f"α={row['alpha']:g}: {row['n_windows']} 个窗口, "
                     f"总时长 {row['total_dark_time']:.6f}, "
                     f"平均并发度 {row['mean_concurrence']:.6f}")

    def handle_validation_result(self, entry: Dict[str, Any]) -> None:
        mark = 'ok' if entry['passed'] else 'FAIL'
        logger.debug(f"初态族 {entry['family']}, α={entry['alpha']:g}: "
                     f"最大偏差 {entry['deviation']:.3e} [{mark}]")
