from typing import Dict, List, Any, Callable, Optional
from collections import defaultdict

from utils.logger import Logger

logger = Logger.get_logger(__name__)


class EventBus:
    """事件总线"""
    _instance: Optional['EventBus'] = None

    def __init__(self):
        self._subscribers: Dict[str, List[Callable]] = defaultdict(list)

    @classmethod
    def get_instance(cls) -> 'EventBus':
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    def subscribe(self, event_type: str, callback: Callable) -> None:
        """订阅事件"""
        if callback not in self._subscribers[event_type]:
            self._subscribers[event_type].append(callback)
            logger.debug(f"订阅事件 {event_type}: {getattr(callback, '__name__', callback)}")

    def unsubscribe(self, event_type: str, callback: Callable) -> None:
        """取消订阅，未订阅的回调直接忽略"""
        callbacks = self._subscribers.get(event_type, [])
        if callback in callbacks:
            callbacks.remove(callback)
            logger.debug(f"取消订阅事件 {event_type}: {getattr(callback, '__name__', callback)}")

    def subscriber_count(self, event_type: str) -> int:
        """某事件的订阅者数量"""
        return len(self._subscribers.get(event_type, []))

    def publish(self, event_type: str, data: Any = None) -> None:
        """发布事件，单个订阅者失败不影响其他订阅者"""
        for callback in list(self._subscribers.get(event_type, [])):
            try:
                callback(data)
            except Exception as e:
                logger.error(f"事件处理失败 {event_type}: {str(e)}")

    def clear(self) -> None:
        """清除所有订阅"""
        self._subscribers.clear()
        logger.debug("清除所有事件订阅")
