import numpy as np
import pytest

from utils.config import Config
from utils.event_bus import EventBus


@pytest.fixture(autouse=True)
def clean_singletons():
    """每个用例结束后清空事件订阅与已加载的配置"""
    yield
    EventBus.get_instance().clear()
    Config.reset()


@pytest.fixture
def figure_grid():
    return np.linspace(0.0, 25.0, 2001)


@pytest.fixture
def validation_grid():
    return np.linspace(0.0, 25.0, 200)


@pytest.fixture
def coarse_grid():
    return np.linspace(0.0, 25.0, 251)
