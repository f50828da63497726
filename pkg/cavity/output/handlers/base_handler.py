from abc import ABC, abstractmethod
from typing import Callable, List, Tuple

from utils.event_bus import EventBus
from utils.logger import Logger

logger = Logger.get_logger(__name__)


class ResultHandler(ABC):
    """结果处理器基类"""

    def __init__(self):
        self.event_bus = EventBus.get_instance()
        self.subscriptions: List[Tuple[str, Callable]] = []
        self._register_handlers()

    @abstractmethod
    def _register_handlers(self) -> None:
        """注册事件处理器"""
        pass

    def subscribe(self, event_type: str, handler: Callable) -> None:
        """订阅事件"""
        self.event_bus.subscribe(event_type, handler)
        self.subscriptions.append((event_type, handler))
        logger.debug(f"{self.__class__.__name__} 订阅事件: {event_type}")

    def unsubscribe_all(self) -> None:
        """取消所有订阅"""
        for event_type, handler in self.subscriptions:
            self.event_bus.unsubscribe(event_type, handler)
        self.subscriptions.clear()
        logger.debug(f"{self.__class__.__name__} 取消所有订阅")
