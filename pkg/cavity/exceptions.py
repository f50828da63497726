class CavityError(Exception):
    """模拟库异常基类"""


class ParameterError(CavityError, ValueError):
    """模型参数非法 (负的 α / gt、Fock 占据数不相等等)"""


class NormalizationError(CavityError, ValueError):
    """态矢量未归一化"""


class BasisError(CavityError, ValueError):
    """不变子空间基矢非法，或振幅矢量不属于任何初态族"""


class DensityMatrixError(CavityError, ValueError):
    """约化密度矩阵不满足厄米、单位迹或半正定条件"""


class SeriesError(CavityError, ValueError):
    """并发度时间序列非法或扫描参数非法"""


class ConfigError(CavityError, ValueError):
    """命令行/配置文件错误，对应退出码 2"""


class OutputError(CavityError, OSError):
    """输出路径不可写，对应退出码 3"""


class ValidationFailure(CavityError, RuntimeError):
    """解析解与数值基准不一致，对应退出码 4"""
