import numpy as np

from ..dynamics import Family, WStateSpec
from .registry import PresetRegistry

_THIRD = 1 / np.sqrt(3)
_SIXTH = 1 / np.sqrt(6)
_TWO_THIRDS = np.sqrt(2 / 3)

PresetRegistry.register(
    'w-family1',
    WStateSpec(Family.FAMILY1, _THIRD, _THIRD, _THIRD),
    '第一类初态 a=b=c=1/√3',
)
PresetRegistry.register(
    'family1-heavy-a',
    WStateSpec(Family.FAMILY1, _TWO_THIRDS, _SIXTH, _SIXTH),
    '第一类初态 a=√(2/3), b=c=1/√6',
)
PresetRegistry.register(
    'w-family2',
    WStateSpec(Family.FAMILY2, _THIRD, _THIRD, _THIRD),
    '第二类初态 a=b=c=1/√3',
)
PresetRegistry.register(
    'family2-heavy-b',
    WStateSpec(Family.FAMILY2, _SIXTH, _TWO_THIRDS, _SIXTH),
    '第二类初态 b=√(2/3), a=c=1/√6',
)
# 大系数放在 c 上；c 取 √(2/3) 保证归一化
PresetRegistry.register(
    'family2-heavy-c',
    WStateSpec(Family.FAMILY2, _SIXTH, _SIXTH, _TWO_THIRDS),
    '第二类初态 a=b=1/√6, c=√(2/3)',
)

DEFAULT_PRESETS = {
    Family.FAMILY1: 'w-family1',
    Family.FAMILY2: 'w-family2',
}
