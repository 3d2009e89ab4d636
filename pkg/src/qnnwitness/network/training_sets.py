"""
训练数据
纠缠指示器的四组训练对、相位指示器的等间隔相位训练集以及推广的相位目标函数
"""
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from ..core.states import PureState
from .indicators import OutputFunctional
from ..utils.exceptions import InvalidInputError

_NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TrainingSample:
    """训练样本 (输入态, 输出泛函, 目标值)"""
    input: PureState
    functional: OutputFunctional
    target: float
    label: str = ""

    def __post_init__(self):
        if not (math.isfinite(self.target) and 0.0 <= self.target <= 1.0):
            raise InvalidInputError(f"训练目标必须在 [0, 1] 内: {self.target}")

    def to_dict(self):
        return {
            'label': self.label,
            'input': self.input.to_list(),
            'functional': self.functional.label,
            'target': self.target
        }


def make_entanglement_training_set() -> List[TrainingSample]:
    """纠缠指示器训练集，按固定行序返回"""
    zz2 = OutputFunctional.zz_squared()
    return [
        TrainingSample(PureState.from_amplitudes([1, 0, 0, 1], normalize=True), zz2, 1.0, "bell"),
        TrainingSample(PureState.from_amplitudes([0.5, 0.5, 0.5, 0.5]), zz2, 0.0, "flat_product"),
        TrainingSample(PureState.from_amplitudes([0, 0, 0.5, 1], normalize=True), zz2, 0.0, "product_10_11"),
        TrainingSample(PureState.from_amplitudes([1, 1, 1, 0], normalize=True), zz2, 0.44, "partial"),
    ]


def phase_state(phi: float, a00: float = 1.0 / math.sqrt(2.0), a11: float = 1.0 / math.sqrt(2.0)) -> PureState:
    """a00|00> + a11·e^{iφ}|11>"""
    return PureState.from_polar(a00, 0.0, 0.0, a11, phi=phi)


def make_phase_training_set(n: int = 11) -> List[TrainingSample]:
    """
    相位指示器训练集：(|00> + e^{iφ}|11>)/√2，φ 在 [−π, π] 上等间隔，目标 cos²(φ/2)

    Args:
        n: 样本数，至少为2
    """
    if n < 2:
        raise InvalidInputError(f"相位训练集至少需要2个样本: {n}")
    functional = OutputFunctional.projection(3)
    return [
        TrainingSample(phase_state(phi), functional, float(np.cos(phi / 2.0) ** 2), f"phi={phi:.6f}")
        for phi in np.linspace(-np.pi, np.pi, n)
    ]


def extended_phase_target(a00: float, a11: float, phi: float) -> float:
    """
    不等幅 Bell 态的相位目标 2(½ − a00²)²·a11² + 2·a00·a11·cos²(φ/2)

    Raises:
        InvalidInputError: a00² + a11² 偏离1
    """
    if abs(a00 * a00 + a11 * a11 - 1.0) > _NORMALIZATION_TOLERANCE:
        raise InvalidInputError(f"幅值未归一化: a00² + a11² = {a00 * a00 + a11 * a11}")
    return 2.0 * (0.5 - a00 * a00) ** 2 * a11 * a11 + 2.0 * a00 * a11 * math.cos(phi / 2.0) ** 2
