from typing import Any, Dict, List

from utils.logger import Logger
from ..dynamics import WStateSpec
from ..exceptions import ConfigError

logger = Logger.get_logger(__name__)


class PresetRegistry:
    """初态预设注册表"""

    _presets: Dict[str, Dict[str, Any]] = {}

    @classmethod
    def register(cls, name: str, spec: WStateSpec, description: str = '') -> None:
        """注册预设"""
        cls._presets[name] = {
            'spec': spec,
            'description': description,
        }
        logger.debug(f"注册初态预设: {name}")

    @classmethod
    def get(cls, name: str) -> WStateSpec:
        """按名称获取初态"""
        if name not in cls._presets:
            raise ConfigError(f"未找到初态预设: {name} (可选: {', '.join(cls.names())})")
        return cls._presets[name]['spec']

    @classmethod
    def describe(cls, name: str) -> str:
        cls.get(name)
        return cls._presets[name]['description']

    @classmethod
    def names(cls) -> List[str]:
        return sorted(cls._presets)
