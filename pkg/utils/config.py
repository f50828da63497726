import os
import yaml
from typing import Dict, Any, Optional

from .logger import Logger

logger = Logger.get_logger(__name__)


class Config:
    """配置管理类

    进程内单例，懒加载 config/application.yaml。
    """

    _instance = None
    _config: Dict[str, Any] = {}
    _loaded = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @classmethod
    def default_path(cls) -> str:
        """默认配置文件路径"""
        base_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        return os.path.join(base_dir, 'config', 'application.yaml')

    @classmethod
    def load_config(cls, config_path: Optional[str] = None) -> None:
        """加载配置文件，文件不存在时使用空配置"""
        config_path = config_path or cls.default_path()
        cls._loaded = True
        if not os.path.exists(config_path):
            logger.warning(f"配置文件不存在，使用内置默认值: {config_path}")
            cls._config = {}
            return

        with open(config_path, 'r', encoding='utf-8') as f:
            cls._config = yaml.safe_load(f) or {}
        logger.debug(f"加载配置文件: {config_path}")

    @classmethod
    def get_config(cls, key: Optional[str] = None) -> Any:
        """获取配置"""
        if not cls._loaded:
            cls.load_config()
        if key:
            return cls._config.get(key)
        return cls._config

    @classmethod
    def get_section(cls, key: str) -> Dict[str, Any]:
        """获取配置段，缺失时返回空字典"""
        section = cls.get_config(key)
        return dict(section) if isinstance(section, dict) else {}

    @classmethod
    def reset(cls) -> None:
        """清空已加载的配置"""
        cls._config = {}
        cls._loaded = False
