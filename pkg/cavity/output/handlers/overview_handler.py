from typing import Any, Dict

from utils.logger import Logger
from .base_handler import ResultHandler

logger = Logger.get_logger(__name__)


def _format_coeff(value: complex) -> str:
    if value.imag == 0:
        return f"{value.real:.6g}"
    return f"{value:.6g}"


class ConsoleHandler(ResultHandler):
    """控制台输出处理器，只输出摘要"""

    def _register_handlers(self) -> None:
        self.subscribe('series_result', self.handle_series_result)
        self.subscribe('final_result', self.handle_final_result)
        self.subscribe('error', self.handle_error)

    def handle_series_result(self, result: Dict[str, Any]) -> None:
        """处理单条时间序列结果"""
        coeffs = ', '.join(_format_coeff(result[k]) for k in ('a', 'b', 'c'))
        logger.info(f"初态族 {result['family']} ({coeffs}), α={result['alpha']:g}, "
                    f"{result['points']} 个点, gt ∈ [0, {result['gt_max']:g}]")
        logger.info(f"平均并发度: {result['mean_concurrence']:.6f}, "
                    f"最大并发度: {result['max_concurrence']:.6f}")
        if result['n_windows']:
            logger.info(f"纠缠突然死亡: {result['n_windows']} 个窗口, "
                        f"总时长 {result['total_dark_time']:.4f}, "
                        f"首次死亡 gt={result['first_death']:.4f}")
        else:
            logger.info("没有纠缠突然死亡窗口")

    def handle_final_result(self, result: Dict[str, Any]) -> None:
        """处理扫描 / 验证的最终结果"""
        kind = result.get('kind')
        if kind == 'sweep':
            logger.info(f"α 扫描完成: {result['rows']} 个 α")
            if result['esd_free_from_alpha'] is None:
                logger.info("扫描范围内最大的 α 仍有死亡窗口")
            else:
                logger.info(f"α ≥ {result['esd_free_from_alpha']:g} 时没有死亡窗口")
        elif kind == 'validation':
            status = '通过' if result['success'] else '失败'
            logger.info(f"解析解验证{status} (读法 {result['reading']}): "
                        f"{result['checks']} 项, {result['failed']} 项超差, "
                        f"最大偏差 {result['max_deviation']:.3e}")

    def handle_error(self, error: str) -> None:
        logger.warning(error)
