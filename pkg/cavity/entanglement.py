"""原子-原子纠缠: 约化密度矩阵、并发度与纠缠突然死亡窗口"""
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from utils.logger import Logger
from .dynamics import (
    AmplitudeVector, Family, WStateSpec, block_basis, evolve, evolve_grid,
)
from .exceptions import BasisError, DensityMatrixError, SeriesError
from .kernels import ModelParams

logger = Logger.get_logger(__name__)

HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
PSD_TOLERANCE = 1e-10
# 低于此值的本征值视为数值噪声，不参与 Wootters 分解
EIGEN_FLOOR = 1e-14
CONCURRENCE_SLACK = 1e-12

DEFAULT_ZERO_THRESHOLD = 1e-9
DEFAULT_MIN_WINDOW = 0.05
REFINE_TOLERANCE = 1e-6

SIGMA_YY = np.array([
    [0, 0, 0, -1],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [-1, 0, 0, 0],
], dtype=complex)


@dataclass(frozen=True, eq=False)
class AtomicDensityMatrix:
    """两原子约化密度矩阵，基矢顺序 PP, PM, MP, MM"""

    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (4, 4):
            raise DensityMatrixError(f"约化密度矩阵必须是 4×4: {matrix.shape}")
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    @property
    def populations(self) -> np.ndarray:
        return np.diag(self.matrix).real.copy()

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def check(self) -> None:
        """厄米、单位迹、半正定检查"""
        asymmetry = float(np.max(np.abs(self.matrix - self.matrix.conj().T)))
        if asymmetry > HERMITIAN_TOLERANCE:
            raise DensityMatrixError(f"密度矩阵不是厄米矩阵: 偏差 {asymmetry:.3e}")
        if abs(self.trace - 1.0) > TRACE_TOLERANCE:
            raise DensityMatrixError(f"密度矩阵迹不为 1: {self.trace:.15g}")
        smallest = float(self.eigenvalues().min())
        if smallest < -PSD_TOLERANCE:
            raise DensityMatrixError(f"密度矩阵不是半正定的: 最小本征值 {smallest:.3e}")


@dataclass(frozen=True, eq=False)
class ConcurrenceSeries:
    """并发度时间序列"""

    gts: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        gts = np.array(self.gts, dtype=float).ravel()
        values = np.array(self.values, dtype=float).ravel()
        if gts.shape != values.shape:
            raise SeriesError(f"时间点 {gts.size} 与并发度 {values.size} 个数不一致")
        if gts.size > 1 and np.any(np.diff(gts) <= 0):
            raise SeriesError("时间点必须严格递增")
        if values.size and (values.min() < -CONCURRENCE_SLACK or values.max() > 1 + CONCURRENCE_SLACK):
            raise SeriesError(f"并发度超出 [0, 1]: [{values.min()}, {values.max()}]")
        gts.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, 'gts', gts)
        object.__setattr__(self, 'values', values)

    def __len__(self) -> int:
        return int(self.gts.size)

    @property
    def spacing(self) -> float:
        """最大相邻间隔"""
        return float(np.max(np.diff(self.gts))) if len(self) > 1 else 0.0


@dataclass(frozen=True)
class EsdReport:
    """并发度为零的极大时间窗口"""

    windows: Tuple[Tuple[float, float], ...]
    zero_threshold: float
    min_window: float

    @property
    def n_windows(self) -> int:
        return len(self.windows)

    @property
    def total_dark_time(self) -> float:
        return float(sum(end - start for start, end in self.windows))

    @property
    def first_death(self) -> Optional[float]:
        return self.windows[0][0] if self.windows else None


def reduced_density(amps: AmplitudeVector) -> AtomicDensityMatrix:
    """对场求偏迹

    振幅按 (原子态, Fock 态) 排成 4×F 矩阵 Ψ，ρ_A = Ψ·Ψ†。
    """
    amps.check_normalized()
    focks = amps.basis.fock_labels
    psi = np.zeros((4, len(focks)), dtype=complex)
    for amplitude, (state, fock) in zip(amps.amps, amps.basis):
        psi[state.value, focks.index(fock)] += amplitude

    rho = AtomicDensityMatrix(psi @ psi.conj().T)
    rho.check()
    return rho


def _family_of(amps: AmplitudeVector) -> Family:
    for family in Family:
        if amps.basis == block_basis(family):
            return family
    raise BasisError(f"振幅基矢不属于任何初态族: {amps.basis}")


def xstate_witness(amps: AmplitudeVector) -> float:
    """截断前的 X 态表达式

    第一类为 |X1·X2|，第二类为 |X2·X3| - |X1·X4|；取负值时处于纠缠死亡区。
    """
    x = amps.amps
    if _family_of(amps) is Family.FAMILY1:
        return float(abs(x[0] * x[1]))
    return float(abs(x[1] * x[2]) - abs(x[0] * x[3]))


def concurrence_xstate(amps: AmplitudeVector) -> float:
    """X 态并发度 C = 2·max{0, witness}"""
    value = 2.0 * max(0.0, xstate_witness(amps))
    return float(min(value, 1.0))


def concurrence_wootters(rho: AtomicDensityMatrix) -> float:
    """通用 Wootters 并发度

    √μ_i 是 √ρ·(σy⊗σy)·√ρ*·(σy⊗σy)·√ρ 本征值的平方根。写 ρ = W·W†，
    它们等于对称矩阵 Wᵀ·(σy⊗σy)·W 的奇异值，用 SVD 求出。
    """
    rho.check()
    weights, vectors = np.linalg.eigh(rho.matrix)
    keep = weights > EIGEN_FLOOR
    factor = vectors[:, keep] * np.sqrt(weights[keep])

    singular = np.linalg.svd(factor.T @ SIGMA_YY @ factor, compute_uv=False)
    roots = np.zeros(4)
    roots[:singular.size] = np.sort(singular)[::-1]

    value = roots[0] - roots[1] - roots[2] - roots[3]
    return float(min(max(0.0, value), 1.0))


def concurrence_series(spec: WStateSpec, alpha: float, gts: Sequence[float]) -> ConcurrenceSeries:
    """时间网格上的 X 态并发度"""
    amplitudes = evolve_grid(spec, alpha, gts)
    return ConcurrenceSeries(np.asarray(gts, dtype=float),
                             np.array([concurrence_xstate(x) for x in amplitudes]))


def concurrence_at(spec: WStateSpec, alpha: float) -> Callable[[float], float]:
    """固定初态与 α 的并发度函数 C(gt)，供窗口端点细化使用"""
    base = ModelParams(alpha)

    def concurrence(gt: float) -> float:
        return concurrence_xstate(evolve(spec, base.at(gt)))

    return concurrence


def _refine_edge(refine: Callable[[float], float], zero_threshold: float,
                 lit: float, dark: float, tolerance: float) -> float:
    """在亮点与暗点之间二分定位 C = zero_threshold"""
    def excess(gt: float) -> float:
        return refine(gt) - zero_threshold

    f_lit, f_dark = excess(lit), excess(dark)
    if f_dark == 0:
        return dark
    if f_lit * f_dark > 0:
        logger.debug(f"端点 ({lit}, {dark}) 两侧没有符号变化，保留采样点")
        return dark
    lo, hi = sorted((lit, dark))
    return float(optimize.bisect(excess, lo, hi, xtol=tolerance))


def scan_esd(series: ConcurrenceSeries,
             zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
             min_window: float = DEFAULT_MIN_WINDOW,
             refine: Optional[Callable[[float], float]] = None,
             tolerance: float = REFINE_TOLERANCE) -> EsdReport:
    """扫描纠缠突然死亡窗口

    连续满足 C ≤ zero_threshold 的采样点合并为一个窗口；给出 refine 时
    用二分法把窗口端点细化到 tolerance，最后丢弃短于 min_window 的窗口。
    """
    if len(series) == 0:
        raise SeriesError("并发度序列为空")
    if not (np.isfinite(zero_threshold) and zero_threshold > 0):
        raise SeriesError(f"zero_threshold 必须为正: {zero_threshold}")
    if not np.isfinite(min_window) or min_window < 0:
        raise SeriesError(f"min_window 必须是非负有限实数: {min_window}")
    if len(series) > 1 and min_window < series.spacing * (1 - 1e-9):
        raise SeriesError(f"min_window={min_window} 小于网格间隔 {series.spacing}")

    gts, dark = series.gts, series.values <= zero_threshold
    edges = np.diff(np.concatenate(([0], dark.astype(int), [0])))
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1) - 1

    windows: List[Tuple[float, float]] = []
    for i0, i1 in zip(starts, stops):
        start, end = float(gts[i0]), float(gts[i1])
        if refine is not None:
            if i0 > 0:
                start = _refine_edge(refine, zero_threshold, gts[i0 - 1], gts[i0], tolerance)
            if i1 < len(series) - 1:
                end = _refine_edge(refine, zero_threshold, gts[i1 + 1], gts[i1], tolerance)
        if end - start >= min_window:
            windows.append((start, end))
        else:
            logger.debug(f"忽略短暂零点 [{start:.6f}, {end:.6f}]")

    report = EsdReport(tuple(windows), float(zero_threshold), float(min_window))
    logger.debug(f"找到 {report.n_windows} 个死亡窗口, 总时长 {report.total_dark_time:.6f}")
    return report
