"""
可调两比特哈密顿量
H = K_A·σxA + K_B·σxB + ε_A·σzA + ε_B·σzB + ζ·σzAσzB（ħ = 1，参数单位 rad/ns）
"""
import math
from dataclasses import dataclass, asdict
from typing import Dict, Mapping

import numpy as np

from ..utils.exceptions import InvalidInputError

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

XI = np.kron(SIGMA_X, IDENTITY2)
IX = np.kron(IDENTITY2, SIGMA_X)
ZI = np.kron(SIGMA_Z, IDENTITY2)
IZ = np.kron(IDENTITY2, SIGMA_Z)
ZZ = np.kron(SIGMA_Z, SIGMA_Z)
YY = np.kron(SIGMA_Y, SIGMA_Y)

PARAMETER_NAMES = ("K_A", "K_B", "eps_A", "eps_B", "zeta")

# ∂H/∂p，顺序与 PARAMETER_NAMES 一致
GENERATORS = np.stack([XI, IX, ZI, IZ, ZZ])


@dataclass(frozen=True)
class HamiltonianParams:
    """哈密顿量的五个参数"""
    K_A: float = 0.0
    K_B: float = 0.0
    eps_A: float = 0.0
    eps_B: float = 0.0
    zeta: float = 0.0

    def __post_init__(self):
        for name in PARAMETER_NAMES:
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise InvalidInputError(f"参数 {name} 不是实数: {value!r}")
            if not math.isfinite(value):
                raise InvalidInputError(f"参数 {name} 不是有限值: {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_array(cls, values) -> "HamiltonianParams":
        values = np.asarray(values, dtype=float).reshape(-1)
        if values.shape != (5,):
            raise InvalidInputError(f"需要5个参数，实际为 {values.size}")
        return cls(*values.tolist())

    @classmethod
    def from_dict(cls, data: Mapping[str, float]) -> "HamiltonianParams":
        unknown = set(data) - set(PARAMETER_NAMES)
        if unknown:
            raise InvalidInputError(f"未知的哈密顿量参数: {sorted(unknown)}")
        return cls(**{name: data.get(name, 0.0) for name in PARAMETER_NAMES})

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, name) for name in PARAMETER_NAMES], dtype=float)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def build_hamiltonian(p: HamiltonianParams) -> np.ndarray:
    """
    组装 4×4 哈密顿量矩阵

    Args:
        p: 哈密顿量参数

    Returns:
        电荷基下的厄米矩阵（迹为零）
    """
    return np.tensordot(p.as_array(), GENERATORS, axes=([0], [0]))


def hamiltonians(samples: np.ndarray) -> np.ndarray:
    """
    批量组装哈密顿量

    Args:
        samples: 形状 (..., 5) 的参数采样

    Returns:
        形状 (..., 4, 4) 的哈密顿量数组
    """
    samples = np.asarray(samples, dtype=float)
    if samples.shape[-1:] != (5,):
        raise InvalidInputError(f"参数采样最后一维必须为5，实际形状 {samples.shape}")
    if not np.all(np.isfinite(samples)):
        raise InvalidInputError("参数采样包含非有限值")
    return np.tensordot(samples, GENERATORS, axes=([-1], [0]))
