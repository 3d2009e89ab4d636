"""
纠缠度量
Bell 态构造、Wootters 共生度、形成纠缠、平坦态共生度以及双拷贝 Mintert 见证
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
from scipy.special import xlogy

from .hamiltonian import IDENTITY2, SIGMA_X, SIGMA_Z, YY
from .states import DensityMatrix, PureState, as_density_matrix
from ..utils.exceptions import InvalidInputError

_EIGENVALUE_FLOOR = 1e-12  # 低于此值的 ρ 本征值（含数值负值）按零处理
_SQRT_HALF = 1.0 / math.sqrt(2.0)


class BellFamily(str, Enum):
    """Bell 态类别"""
    PHI_PLUS = "phi_plus"
    PHI_MINUS = "phi_minus"
    PSI_PLUS = "psi_plus"
    PSI_MINUS = "psi_minus"


# (第一个基矢, 第二个基矢, 相对符号)
_BELL_LAYOUT = {
    BellFamily.PHI_PLUS: (0, 3, 1.0),
    BellFamily.PHI_MINUS: (0, 3, -1.0),
    BellFamily.PSI_PLUS: (1, 2, 1.0),
    BellFamily.PSI_MINUS: (1, 2, -1.0),
}

# 把 Ψ−(θ) 映射为各 Bell 态 (θ) 的局域幺正 U_A⊗U_B
_RESET_UNITARIES = {
    BellFamily.PSI_MINUS: np.kron(IDENTITY2, IDENTITY2),
    BellFamily.PSI_PLUS: np.kron(SIGMA_Z, IDENTITY2),
    BellFamily.PHI_MINUS: np.kron(IDENTITY2, SIGMA_X),
    BellFamily.PHI_PLUS: np.kron(SIGMA_Z, SIGMA_X),
}


def canonical_angle(angle: float) -> float:
    """把角度规范到 (−π, π]"""
    wrapped = math.remainder(float(angle), 2.0 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


@dataclass(frozen=True)
class BellKind:
    """带相位偏移的 Bell 态，例如 Ψ−(θ) = (|01> − e^{iθ}|10>)/√2"""
    family: BellFamily
    offset: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "family", BellFamily(self.family))
        if not math.isfinite(self.offset):
            raise InvalidInputError(f"相位偏移不是有限值: {self.offset}")
        object.__setattr__(self, "offset", canonical_angle(self.offset))


@dataclass(frozen=True)
class WitnessTarget:
    """见证所针对的参考 Bell 态（偏移为0）"""
    reference: BellFamily = BellFamily.PSI_MINUS

    def __post_init__(self):
        object.__setattr__(self, "reference", BellFamily(self.reference))


def bell_state(kind: BellKind) -> PureState:
    """构造 Bell 态"""
    first, second, sign = _BELL_LAYOUT[kind.family]
    amplitudes = np.zeros(4, dtype=complex)
    amplitudes[first] = _SQRT_HALF
    amplitudes[second] = sign * np.exp(1j * kind.offset) * _SQRT_HALF
    return PureState(amplitudes)


def flat_state(xi: float, theta: float, phi: float) -> PureState:
    """平坦态 ½(|00> + e^{iξ}|01> + e^{iθ}|10> + e^{iφ}|11>)"""
    return PureState.from_polar(0.5, 0.5, 0.5, 0.5, xi=xi, theta=theta, phi=phi)


def flat_state_concurrence(xi: float, theta: float, phi: float) -> float:
    """平坦态共生度的解析式 |sin((φ − ξ − θ)/2)|"""
    return abs(math.sin((phi - xi - theta) / 2.0))


def _psd_sqrt(entries: np.ndarray) -> np.ndarray:
    eigenvalues, eigenvectors = np.linalg.eigh(entries)
    roots = np.sqrt(np.where(eigenvalues > _EIGENVALUE_FLOOR, eigenvalues, 0.0))
    return (eigenvectors * roots) @ eigenvectors.conj().T


def concurrence(rho: Union[DensityMatrix, PureState, np.ndarray]) -> float:
    """
    Wootters 共生度 C = max(0, λ1 − λ2 − λ3 − λ4)

    λ_i 为 √ρ·(σy⊗σy)·√ρ* 的奇异值，即 ρρ̃ 本征值的平方根

    Raises:
        InvalidInputError: 不是合法的密度矩阵
    """
    density = as_density_matrix(rho)
    if not density.is_valid():
        raise InvalidInputError("共生度需要合法的密度矩阵")
    root = _psd_sqrt(density.entries)
    lambdas = np.linalg.svd(root @ YY @ root.conj(), compute_uv=False)
    return float(min(1.0, max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])))


def binary_entropy(p: float) -> float:
    """以2为底的二元熵"""
    p = min(1.0, max(0.0, float(p)))
    return float(-(xlogy(p, p) + xlogy(1.0 - p, 1.0 - p)) / math.log(2.0))


def entanglement_of_formation(rho: Union[DensityMatrix, PureState, np.ndarray]) -> float:
    """形成纠缠 E_F = h((1 + √(1 − C²))/2)，单位 ebit"""
    c = concurrence(rho)
    return binary_entropy((1.0 + math.sqrt(max(0.0, 1.0 - c * c))) / 2.0)


def _swap_two_qubits() -> np.ndarray:
    swap = np.zeros((4, 4), dtype=complex)
    for a in range(2):
        for b in range(2):
            swap[2 * b + a, 2 * a + b] = 1.0
    return swap


_SWAP = _swap_two_qubits()
_SINGLET_PROJECTOR = (np.eye(4) - _SWAP) / 2.0

# 16维空间按 (A1 B1 A2 B2) 排列：拷贝1上的反对称投影 ⊗ 拷贝2上的 P₋ − P₊ = −SWAP
_WITNESS_OPERATOR = np.kron(_SINGLET_PROJECTOR, -_SWAP)


def witness_operator(target: WitnessTarget = WitnessTarget()) -> np.ndarray:
    """目标 Bell 态对应的 16×16 见证算符（对默认算符做局域幺正共轭）"""
    local = _RESET_UNITARIES[target.reference]
    both_copies = np.kron(local, local)
    return both_copies @ _WITNESS_OPERATOR @ both_copies.conj().T


def mintert_witness(rho: Union[DensityMatrix, PureState, np.ndarray],
                    target: WitnessTarget = WitnessTarget()) -> float:
    """
    双拷贝见证 W = −4·tr((ρ⊗ρ)·V)，负值表示检测到纠缠

    Args:
        rho: 密度矩阵
        target: 见证所针对的 Bell 态

    Returns:
        见证值
    """
    density = as_density_matrix(rho)
    if not density.is_valid():
        raise InvalidInputError("见证需要合法的密度矩阵")
    two_copies = np.kron(density.entries, density.entries)
    return float(-4.0 * np.real(np.trace(two_copies @ witness_operator(target))))
