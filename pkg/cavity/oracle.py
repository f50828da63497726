"""数值基准: 直接由哈密顿量求 exp(-iH·gt)

在精确的不变块上对实对称矩阵做本征分解，没有 Fock 截断误差。
截断 Fock 空间的全空间构造只用来核对块矩阵中的 √n 因子。
"""
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np
from scipy import linalg

from utils.logger import Logger
from .dynamics import BlockBasis, Family, Label, analytic_block_u, manifold_basis
from .exceptions import BasisError, ParameterError
from .kernels import MiddleTermReading, ModelParams

logger = Logger.get_logger(__name__)

TRUNCATION_CUTOFF = 5


@dataclass(frozen=True, eq=False)
class BlockHamiltonian:
    """块基矢下的哈密顿量 (以 ħg 为单位)"""

    basis: BlockBasis
    matrix: np.ndarray
    alpha: float

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        if matrix.shape != (len(self.basis), len(self.basis)):
            raise BasisError(f"哈密顿量维数 {matrix.shape} 与基矢维数 {len(self.basis)} 不符")
        if not np.array_equal(matrix, matrix.T):
            raise BasisError("块哈密顿量必须对称")
        if np.any(np.diag(matrix) != 0):
            raise BasisError("相互作用绘景下块哈密顿量的对角元必须为零")
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)


def build_manifold_hamiltonian(n: int, alpha: float) -> BlockHamiltonian:
    """激发流形 n 上的哈密顿量

    耦合: PP↔PM、PP↔MP 为 √n·√n = n，PM↔MP 为 α，PM↔MM、MP↔MM 为 n+1。
    """
    alpha = ModelParams(alpha).alpha
    basis = manifold_basis(n)
    up, down = n, n + 1
    full = np.array([
        [0.0, up, up, 0.0],
        [up, 0.0, alpha, down],
        [up, alpha, 0.0, down],
        [0.0, down, down, 0.0],
    ])
    matrix = full[1:, 1:] if len(basis) == 3 else full
    return BlockHamiltonian(basis, matrix, alpha)


def build_hamiltonian(family, alpha: float) -> BlockHamiltonian:
    """初态族所在块的哈密顿量"""
    return build_manifold_hamiltonian(Family.parse(family).manifold, alpha)


def oracle_u(ham: BlockHamiltonian, gt: float) -> np.ndarray:
    """V·diag(exp(-i·e_k·gt))·Vᵀ"""
    gt = ModelParams(ham.alpha, gt).gt
    if gt == 0:
        return np.eye(len(ham.basis), dtype=complex)
    energies, vectors = linalg.eigh(ham.matrix)
    phases = np.exp(-1j * energies * gt)
    return (vectors * phases) @ vectors.T


def validate_analytic(family, alpha: float, grid: Iterable[float],
                      reading: MiddleTermReading = MiddleTermReading.DERIVED) -> float:
    """网格上解析块矩阵与数值基准的最大逐元偏差"""
    grid = [float(gt) for gt in grid]
    if not grid:
        raise ParameterError("验证网格不能为空")

    family = Family.parse(family)
    ham = build_hamiltonian(family, alpha)
    deviation = 0.0
    for gt in grid:
        analytic = analytic_block_u(family, ModelParams(alpha, gt), reading)
        deviation = max(deviation, float(np.max(np.abs(analytic - oracle_u(ham, gt)))))

    logger.debug(f"{family.name} alpha={alpha} reading={reading.value}: "
                 f"{len(grid)} 个点, 最大偏差 {deviation:.3e}")
    return deviation


# ---- 截断 Fock 空间 (仅用于核对块构造) ----

def ladder_operator(cutoff: int) -> np.ndarray:
    """单模湮灭算符 a，Fock 空间截断到 cutoff 个光子"""
    if cutoff < 1:
        raise ParameterError(f"截断光子数至少为 1: {cutoff}")
    return np.diag(np.sqrt(np.arange(1, cutoff + 1, dtype=float)), k=1)


def two_mode_operators(cutoff: int) -> Tuple[np.ndarray, np.ndarray]:
    """双模湮灭算符 (a1, a2)，态顺序为 n1·(cutoff+1) + n2"""
    a = ladder_operator(cutoff)
    eye = np.eye(cutoff + 1)
    return np.kron(a, eye), np.kron(eye, a)


def truncated_hamiltonian(alpha: float, cutoff: int = TRUNCATION_CUTOFF) -> np.ndarray:
    """原子 ⊗ 双模场全空间上的哈密顿量，维数 4·(cutoff+1)²"""
    alpha = ModelParams(alpha).alpha
    a1, a2 = two_mode_operators(cutoff)
    pair_annihilate = a1 @ a2
    pair_create = pair_annihilate.T

    raising = np.array([[0.0, 1.0], [0.0, 0.0]])  # |+⟩⟨-|，|+⟩ 为第 0 个分量
    lowering = raising.T
    eye2 = np.eye(2)
    r_plus = (np.kron(raising, eye2), np.kron(eye2, raising))
    r_minus = (np.kron(lowering, eye2), np.kron(eye2, lowering))

    ham = sum(np.kron(r_minus[i], pair_create) + np.kron(r_plus[i], pair_annihilate)
              for i in range(2))
    dipole = r_plus[0] @ r_minus[1] + r_plus[1] @ r_minus[0]
    return ham + alpha * np.kron(dipole, np.eye((cutoff + 1) ** 2))


def full_space_index(label: Label, cutoff: int = TRUNCATION_CUTOFF) -> int:
    """块标签在全空间中的下标"""
    state, fock = label
    if max(fock.n1, fock.n2) > cutoff:
        raise BasisError(f"{fock} 超出截断 {cutoff}")
    return state.value * (cutoff + 1) ** 2 + fock.n1 * (cutoff + 1) + fock.n2


def embedded_block(basis: BlockBasis, alpha: float,
                   cutoff: int = TRUNCATION_CUTOFF) -> np.ndarray:
    """从截断全空间哈密顿量中取出块子矩阵"""
    indices = [full_space_index(label, cutoff) for label in basis]
    return truncated_hamiltonian(alpha, cutoff)[np.ix_(indices, indices)]
