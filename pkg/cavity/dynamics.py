"""不变子空间上的解析演化

激发流形 n 由
    (PP, |n-1,n-1⟩), (PM, |n,n⟩), (MP, |n,n⟩), (MM, |n+1,n+1⟩)
张成 (n = 0 时没有 PP 分量)。第一类 W 型初态位于 n = 0 流形，
第二类位于 n = 1 流形。块演化矩阵的列是演化后的基矢。
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from utils.logger import Logger
from . import kernels
from .exceptions import BasisError, NormalizationError, ParameterError
from .kernels import FockPair, MiddleTermReading, ModelParams

logger = Logger.get_logger(__name__)

COEFF_NORM_TOLERANCE = 1e-12
AMPLITUDE_NORM_TOLERANCE = 1e-10


class AtomicState(Enum):
    """两原子基矢，顺序固定为 PP, PM, MP, MM"""

    PP = 0
    PM = 1
    MP = 2
    MM = 3

    @property
    def excited(self) -> int:
        """激发原子数"""
        return {AtomicState.PP: 2, AtomicState.PM: 1,
                AtomicState.MP: 1, AtomicState.MM: 0}[self]

    @property
    def ket(self) -> str:
        return {AtomicState.PP: '+,+', AtomicState.PM: '+,-',
                AtomicState.MP: '-,+', AtomicState.MM: '-,-'}[self]


class Family(Enum):
    """两类 W 型初态"""

    FAMILY1 = 1  # a|+,-;0,0⟩ + b|-,+;0,0⟩ + c|-,-;1,1⟩
    FAMILY2 = 2  # a|+,+;0,0⟩ + b|+,-;1,1⟩ + c|-,+;1,1⟩

    @property
    def manifold(self) -> int:
        return self.value - 1

    @classmethod
    def parse(cls, value) -> 'Family':
        if isinstance(value, Family):
            return value
        try:
            return cls(int(value))
        except (TypeError, ValueError):
            raise ParameterError(f"未知的初态族: {value!r} (可选 1 或 2)")


Label = Tuple[AtomicState, FockPair]


@dataclass(frozen=True)
class BlockBasis:
    """一个不变子空间的有序基矢标签"""

    labels: Tuple[Label, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, 'labels', labels)
        if not labels:
            raise BasisError("基矢不能为空")
        if len(set(labels)) != len(labels):
            raise BasisError(f"基矢标签重复: {self}")
        for state, fock in labels:
            if not fock.is_diagonal:
                raise BasisError(f"基矢中的 Fock 态必须满足 n1 = n2: {state.ket};{fock}")
        excitations = {fock.total + 2 * state.excited for state, fock in labels}
        if len(excitations) != 1:
            raise BasisError(f"基矢不在同一激发数子空间内: {self}")

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)

    @property
    def excitation(self) -> int:
        state, fock = self.labels[0]
        return fock.total + 2 * state.excited

    @property
    def fock_labels(self) -> List[FockPair]:
        """按首次出现顺序排列的不同 Fock 态"""
        seen: List[FockPair] = []
        for _, fock in self.labels:
            if fock not in seen:
                seen.append(fock)
        return seen

    def __str__(self) -> str:
        return '[' + ', '.join(f"|{s.ket};{f.n1},{f.n2}⟩" for s, f in self.labels) + ']'


def manifold_basis(n: int) -> BlockBasis:
    """激发流形 n 的基矢"""
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise ParameterError(f"流形指标必须是非负整数: {n!r}")
    n = int(n)
    labels = [(AtomicState.PM, FockPair.diagonal(n)),
              (AtomicState.MP, FockPair.diagonal(n)),
              (AtomicState.MM, FockPair.diagonal(n + 1))]
    if n >= 1:
        labels.insert(0, (AtomicState.PP, FockPair.diagonal(n - 1)))
    return BlockBasis(tuple(labels))


def block_basis(family) -> BlockBasis:
    """初态族对应的基矢"""
    return manifold_basis(Family.parse(family).manifold)


def analytic_manifold_u(n: int, params: ModelParams,
                        reading: MiddleTermReading = MiddleTermReading.DERIVED) -> np.ndarray:
    """由标量核组装激发流形 n 上的演化矩阵

    矩阵元 (顺序 PP, PM, MP, MM，核均取在 |n,n⟩ 上):
        U11 = 1 + 2n²A/λ          U12 = U13 = nB/θ         U14 = 2n(n+1)A/λ
        U21 = U31 = nB/θ          U22 = U33, U23 = U32     U24 = U34 = (n+1)B/θ
        U41 = 2n(n+1)A/λ          U42 = U43 = (n+1)B/θ     U44 = 1 + 2(n+1)²A/λ
    n = 0 时删去 PP 行列。
    """
    basis = manifold_basis(n)
    fock = FockPair.diagonal(n)
    k = kernels.evaluate_kernels(fock, params)
    u22, u23 = kernels.u_diag_pair(fock, params, reading)

    a_ratio = k.A / k.lambda_
    b_ratio = k.B / k.theta
    up, down = n, n + 1  # PP↔单激发、单激发↔MM 的阶梯算符因子

    full = np.array([
        [1 + 2 * up ** 2 * a_ratio, up * b_ratio, up * b_ratio, 2 * up * down * a_ratio],
        [up * b_ratio, u22, u23, down * b_ratio],
        [up * b_ratio, u23, u22, down * b_ratio],
        [2 * up * down * a_ratio, down * b_ratio, down * b_ratio, 1 + 2 * down ** 2 * a_ratio],
    ], dtype=complex)

    if len(basis) == 3:
        return full[1:, 1:].copy()
    return full


def analytic_block_u(family, params: ModelParams,
                     reading: MiddleTermReading = MiddleTermReading.DERIVED) -> np.ndarray:
    """初态族所在块的演化矩阵"""
    return analytic_manifold_u(Family.parse(family).manifold, params, reading)


@dataclass(frozen=True)
class WStateSpec:
    """W 型初态系数"""

    family: Family
    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        object.__setattr__(self, 'family', Family.parse(self.family))
        for name in ('a', 'b', 'c'):
            object.__setattr__(self, name, complex(getattr(self, name)))
        deviation = abs(self.norm_squared - 1.0)
        if deviation > COEFF_NORM_TOLERANCE:
            raise NormalizationError(
                f"初态系数未归一化: |a|²+|b|²+|c|² = {self.norm_squared:.15g}")

    @property
    def coefficients(self) -> Tuple[complex, complex, complex]:
        return self.a, self.b, self.c

    @property
    def norm_squared(self) -> float:
        return float(sum(abs(x) ** 2 for x in self.coefficients))

    @classmethod
    def normalized(cls, family, a: complex, b: complex, c: complex) -> 'WStateSpec':
        """按模长归一化后构造"""
        norm = float(np.sqrt(sum(abs(complex(x)) ** 2 for x in (a, b, c))))
        if norm == 0:
            raise NormalizationError("初态系数全为零")
        return cls(family, complex(a) / norm, complex(b) / norm, complex(c) / norm)

    def initial_vector(self) -> np.ndarray:
        """块基矢下的初始振幅"""
        vector = list(self.coefficients)
        if self.family is Family.FAMILY2:
            vector.append(0j)
        return np.array(vector, dtype=complex)


@dataclass(frozen=True, eq=False)
class AmplitudeVector:
    """演化后的振幅 X_i"""

    basis: BlockBasis
    amps: np.ndarray
    gt: float

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (len(self.basis),):
            raise BasisError(f"振幅个数 {amps.shape} 与基矢维数 {len(self.basis)} 不符")
        amps.setflags(write=False)
        object.__setattr__(self, 'amps', amps)
        object.__setattr__(self, 'gt', float(self.gt))

    @property
    def norm_deviation(self) -> float:
        return abs(float(np.vdot(self.amps, self.amps).real) - 1.0)

    def check_normalized(self, tolerance: float = AMPLITUDE_NORM_TOLERANCE) -> None:
        if self.norm_deviation > tolerance:
            raise NormalizationError(
                f"振幅未归一化: gt={self.gt}, 偏差 {self.norm_deviation:.3e}")

    def __getitem__(self, index: int) -> complex:
        return complex(self.amps[index])


def evolve(spec: WStateSpec, params: ModelParams,
           reading: MiddleTermReading = MiddleTermReading.DERIVED) -> AmplitudeVector:
    """块演化矩阵作用于初始振幅"""
    if not isinstance(spec, WStateSpec):
        raise ParameterError(f"需要 WStateSpec，得到 {type(spec).__name__}")
    if abs(spec.norm_squared - 1.0) > COEFF_NORM_TOLERANCE:
        raise NormalizationError(f"初态系数未归一化: {spec.norm_squared:.15g}")

    u = analytic_block_u(spec.family, params, reading)
    amplitudes = AmplitudeVector(block_basis(spec.family), u @ spec.initial_vector(), params.gt)
    if reading is MiddleTermReading.DERIVED:
        amplitudes.check_normalized()
    return amplitudes


def evolve_grid(spec: WStateSpec, alpha: float, gts: Sequence[float],
                reading: MiddleTermReading = MiddleTermReading.DERIVED) -> List[AmplitudeVector]:
    """在时间网格上逐点演化"""
    base = ModelParams(alpha)
    logger.debug(f"演化 {spec.family.name}: alpha={alpha}, {len(gts)} 个时间点")
    return [evolve(spec, base.at(gt), reading) for gt in gts]


def formula_amplitudes(spec: WStateSpec, params: ModelParams) -> np.ndarray:
    """按振幅公式逐项计算 X_i

    与 evolve 相互独立，只用于核对。第一类初态 (核取在 |0,0⟩):
        X1 = U22·a + U23·b + (B/θ)·c
        X2 = U23·a + U22·b + (B/θ)·c
        X3 = (B/θ)·a + (B/θ)·b + (1 + 2A/λ)·c
    第二类初态 (核取在 |1,1⟩):
        X1 = (1 + 2A/λ)·a + (B/θ)·b + (B/θ)·c
        X2 = (B/θ)·a + U22·b + U23·c
        X3 = (B/θ)·a + U23·b + U22·c
        X4 = 4(A/λ)·a + 2(B/θ)·b + 2(B/θ)·c
    """
    a, b, c = spec.coefficients
    fock = FockPair.diagonal(spec.family.manifold)
    k = kernels.evaluate_kernels(fock, params)
    u22, u23 = kernels.u_diag_pair(fock, params)
    a_ratio = k.A / k.lambda_
    b_ratio = k.B / k.theta

    if spec.family is Family.FAMILY1:
        return np.array([
            u22 * a + u23 * b + b_ratio * c,
            u23 * a + u22 * b + b_ratio * c,
            b_ratio * a + b_ratio * b + (1 + 2 * a_ratio) * c,
        ], dtype=complex)

    return np.array([
        (1 + 2 * a_ratio) * a + b_ratio * b + b_ratio * c,
        b_ratio * a + u22 * b + u23 * c,
        b_ratio * a + u23 * b + u22 * c,
        4 * a_ratio * a + 2 * b_ratio * b + 2 * b_ratio * c,
    ], dtype=complex)
