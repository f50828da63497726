"""演化算符 U(t) 的标量核

相互作用绘景下 (ħ = g = 1) 的哈密顿量

    H = Σ_i (a1⁺a2⁺ R_i⁻ + R_i⁺ a1 a2) + α (R1⁺R2⁻ + R2⁺R1⁻)

守恒 n1 + n2 + 2·(激发原子数)。U(t) 的矩阵元是场算符的函数，夹在
Fock 态 |n, n⟩ 之间后化为标量:

    λ_n = 2[(n+1)² + n²]
    θ_n = sqrt(4 λ_n + α²)
    A   = exp(-iα gt/2)·[cos(θ gt/2) + i(α/θ)·sin(θ gt/2)] - 1
    B   = exp(-i(α+θ) gt/2)·[1 - exp(iθ gt)]

U22 / U23 的推导:
    单激发原子对 |+,-⟩、|-,+⟩ 分解为反对称态 |s-⟩ 与对称态 |s+⟩。
    |s-⟩ 与场解耦，H|s-⟩ = -α|s-⟩，相位因子为 exp(iα gt)。
    |s+⟩ 所在的对称块 (|+,+⟩, |s+⟩, |-,-⟩) 的本征值为 0 与
    e± = (α ± θ)/2，|s+⟩ 在 e± 本征矢上的权重为 (θ ± α)/(2θ)，于是

        ⟨s+|U|s+⟩ = exp(-i(α+θ)gt/2)/(2θ) · {α[1 - e^{iθgt}] + θ[1 + e^{iθgt}]}

    由 U22 = (⟨s+|U|s+⟩ + e^{iαgt})/2、U23 = (⟨s+|U|s+⟩ - e^{iαgt})/2，
    并写 e^{iαgt} = exp(-i(α+θ)gt/2)·exp(+i(3α+θ)gt/2)，得到

        U22 = exp(-i(α+θ)gt/2)/(4θ) · {α[1 - e^{iθgt}] + 2θ·exp(+i(3α+θ)gt/2) + θ[1 + e^{iθgt}]}
        U23 = exp(-i(α+θ)gt/2)/(4θ) · {α[1 - e^{iθgt}] - 2θ·exp(+i(3α+θ)gt/2) + θ[1 + e^{iθgt}]}

    中间项的指数带正号且含 1/2 因子 (MiddleTermReading.DERIVED)，
    其余读法只用于反例检验。
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from .exceptions import ParameterError


@dataclass(frozen=True)
class FockPair:
    """双模 Fock 态 |n1, n2⟩ 的光子数"""

    n1: int
    n2: int

    def __post_init__(self):
        for name, value in (('n1', self.n1), ('n2', self.n2)):
            if isinstance(value, bool) or int(value) != value:
                raise ParameterError(f"{name} 必须是整数: {value!r}")
            if value < 0:
                raise ParameterError(f"{name} 必须非负: {value}")
        object.__setattr__(self, 'n1', int(self.n1))
        object.__setattr__(self, 'n2', int(self.n2))

    @classmethod
    def diagonal(cls, n: int) -> 'FockPair':
        return cls(n, n)

    @property
    def is_diagonal(self) -> bool:
        return self.n1 == self.n2

    @property
    def total(self) -> int:
        return self.n1 + self.n2

    def __str__(self) -> str:
        return f"|{self.n1},{self.n2}⟩"


@dataclass(frozen=True)
class ModelParams:
    """无量纲模型参数: α = Ω/g，gt 为标度时间"""

    alpha: float
    gt: float = 0.0

    def __post_init__(self):
        for name, value in (('alpha', self.alpha), ('gt', self.gt)):
            value = float(value)
            if not np.isfinite(value) or value < 0:
                raise ParameterError(f"{name} 必须是非负有限实数: {value}")
            object.__setattr__(self, name, value)

    def at(self, gt: float) -> 'ModelParams':
        """同一 α 下的另一时刻"""
        return ModelParams(self.alpha, gt)


@dataclass(frozen=True)
class ScalarKernels:
    """|n, n⟩ 上的标量核"""

    lambda_: float
    theta: float
    A: complex
    B: complex


class MiddleTermReading(Enum):
    """U22/U23 中间指数项的读法"""

    DERIVED = 'derived'            # 2θ·exp(+i(3α+θ)gt/2)
    SIGN_FLIPPED = 'sign-flipped'  # 2θ·exp(-i(3α+θ)gt/2)
    UNHALVED = 'unhalved'          # 2θ·exp(+i(3α+θ)gt)


def _occupation(fock: FockPair) -> int:
    if not fock.is_diagonal:
        raise ParameterError(f"核只在 n1 = n2 的 Fock 态上定义: {fock}")
    return fock.n1


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha < 0:
        raise ParameterError(f"alpha 必须是非负有限实数: {alpha}")
    return alpha


def lambda_theta(fock: FockPair, alpha: float) -> Tuple[float, float]:
    """λ 与 θ 在 |n, n⟩ 上的本征值"""
    n = _occupation(fock)
    alpha = _check_alpha(alpha)
    lam = 2.0 * ((n + 1) ** 2 + n ** 2)
    theta = float(np.sqrt(4.0 * lam + alpha ** 2))
    return lam, theta


def kernel_A(fock: FockPair, params: ModelParams) -> complex:
    """A 核"""
    _, theta = lambda_theta(fock, params.alpha)
    alpha, gt = params.alpha, params.gt
    half = theta * gt / 2.0
    brace = np.cos(half) + 1j * (alpha / theta) * np.sin(half)
    return complex(np.exp(-0.5j * alpha * gt) * brace - 1.0)


def kernel_B(fock: FockPair, params: ModelParams) -> complex:
    """B 核"""
    _, theta = lambda_theta(fock, params.alpha)
    alpha, gt = params.alpha, params.gt
    return complex(np.exp(-0.5j * (alpha + theta) * gt) * (1.0 - np.exp(1j * theta * gt)))


def _middle_phase(reading: MiddleTermReading, alpha: float, theta: float, gt: float) -> complex:
    if reading is MiddleTermReading.DERIVED:
        return np.exp(0.5j * (3.0 * alpha + theta) * gt)
    if reading is MiddleTermReading.SIGN_FLIPPED:
        return np.exp(-0.5j * (3.0 * alpha + theta) * gt)
    if reading is MiddleTermReading.UNHALVED:
        return np.exp(1j * (3.0 * alpha + theta) * gt)
    raise ParameterError(f"未知的中间项读法: {reading!r}")


def u_diag_pair(fock: FockPair, params: ModelParams,
                reading: MiddleTermReading = MiddleTermReading.DERIVED) -> Tuple[complex, complex]:
    """(U22)_{n,n} 与 (U23)_{n,n}"""
    _, theta = lambda_theta(fock, params.alpha)
    alpha, gt = params.alpha, params.gt

    phase = np.exp(-0.5j * (alpha + theta) * gt)
    rotating = np.exp(1j * theta * gt)
    common = alpha * (1.0 - rotating) + theta * (1.0 + rotating)
    middle = 2.0 * theta * _middle_phase(reading, alpha, theta, gt)

    # 先乘相位再除 4θ，gt = 0 时 U22 恰为 1
    return (complex(phase * (common + middle) / (4.0 * theta)),
            complex(phase * (common - middle) / (4.0 * theta)))


def evaluate_kernels(fock: FockPair, params: ModelParams) -> ScalarKernels:
    """一次求出 λ、θ、A、B"""
    lam, theta = lambda_theta(fock, params.alpha)
    return ScalarKernels(
        lambda_=lam,
        theta=theta,
        A=kernel_A(fock, params),
        B=kernel_B(fock, params),
    )
