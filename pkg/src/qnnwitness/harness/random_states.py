"""
随机纯态生成
实系数：实高斯向量归一化（3维单位球面上均匀）；复系数：复高斯向量归一化（Haar 均匀）
"""
from enum import Enum
from typing import List

import numpy as np
from scipy.stats import unitary_group

from ..core.states import PureState
from ..utils.exceptions import NumericalError


class RandomMode(str, Enum):
    """随机态类型"""
    REAL = "real"
    COMPLEX = "complex"


DISTRIBUTION_NOTES = {
    RandomMode.REAL: "实高斯向量归一化，a00 ≥ 0",
    RandomMode.COMPLEX: "复高斯向量归一化（Haar），去整体相位使 a00 为非负实数",
}


def _normalized(vector: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(vector)
    if norm == 0.0:  # 概率为零
        raise NumericalError("随机向量为零")
    return vector / norm


def random_pure_state(mode: RandomMode, rng: np.random.Generator) -> PureState:
    """
    生成一个随机纯态

    Args:
        mode: REAL 或 COMPLEX
        rng: numpy 随机数生成器

    Returns:
        规范形式的纯态（a00 为非负实数）
    """
    mode = RandomMode(mode)
    if mode is RandomMode.REAL:
        vector = _normalized(rng.standard_normal(4))
        if vector[0] < 0:
            vector = -vector
        return PureState(vector.astype(complex))
    vector = _normalized(rng.standard_normal(4) + 1j * rng.standard_normal(4))
    return PureState(vector).canonical()


def random_pure_states(mode: RandomMode, n: int, rng: np.random.Generator) -> List[PureState]:
    return [random_pure_state(mode, rng) for _ in range(n)]


def random_product_state(rng: np.random.Generator) -> PureState:
    """ψ_A ⊗ ψ_B，两个单比特态各自 Haar 随机"""
    qubit_a = _normalized(rng.standard_normal(2) + 1j * rng.standard_normal(2))
    qubit_b = _normalized(rng.standard_normal(2) + 1j * rng.standard_normal(2))
    return PureState(np.kron(qubit_a, qubit_b))


def random_local_unitary(rng: np.random.Generator) -> np.ndarray:
    """U_A ⊗ U_B，两个 Haar 随机 2×2 幺正矩阵"""
    return np.kron(unitary_group.rvs(2, random_state=rng), unitary_group.rvs(2, random_state=rng))
