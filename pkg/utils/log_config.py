import logging
from typing import Optional

from .logger import Logger


class LogConfig:
    """日志配置"""

    @staticmethod
    def setup_logging(log_level: str = 'INFO', log_dir: Optional[str] = None) -> None:
        """设置日志配置

        log_dir 为空时只输出到控制台 (stderr)。
        """
        Logger.set_log_dir(log_dir)

        level = getattr(logging, str(log_level).upper(), logging.INFO)
        Logger.set_level(level)

        logging.getLogger().setLevel(level)
