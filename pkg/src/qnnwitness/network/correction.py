"""
相位校正
用相位指示器在一个拷贝上测出相位偏移，在另一个拷贝上旋转消去，再用纠缠指示器求值
"""
import math
from dataclasses import dataclass, asdict
from enum import Enum
from typing import Optional

import numpy as np

from ..core.hamiltonian import IDENTITY2, SIGMA_X
from ..core.measures import entanglement_of_formation
from ..core.propagator import IntegrationConfig
from ..core.states import PureState
from .indicators import IndicatorEvaluator, OutputFunctional, as_evaluator
from ..utils.exceptions import InvalidInputError, NumericalError

OVERSHOOT_TOLERANCE = 1e-9
PHASE_BASIS_INDICES = (1, 2, 3)

# 把 (3 − b, b) 这一对基矢映射到 (|00>, |11>) 的局域比特翻转
_RELABEL = {
    1: np.kron(SIGMA_X, IDENTITY2),
    2: np.kron(IDENTITY2, SIGMA_X),
    3: np.kron(IDENTITY2, IDENTITY2),
}


class SignPolicy(str, Enum):
    """arccos 反演的符号处理"""
    PROBE = "probe"  # 额外两个拷贝分别旋转 ±φ，保留相位输出较大的一侧
    POSITIVE = "positive"  # 总是旋转 +φ


class OscillationModel(str, Enum):
    """反常相位振荡的经验曲面"""
    BELL_MAGNITUDE = "bell_magnitude"  # sin²(2a00)·cos²φ
    CONTAMINATED = "contaminated"  # 0.9·cos²(1.3a01)·cos²φ


@dataclass(frozen=True)
class PhaseEstimate:
    """相位估计，raw_output = cos²(phi/2)"""
    phi: float
    raw_output: float
    ambiguity_flag: bool = True

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class CorrectionResult:
    """校正前后的纠缠指示器输出与 E_F"""
    uncorrected: float
    corrected: float
    oracle: float
    estimate: PhaseEstimate
    applied_phase: float

    def to_dict(self):
        document = asdict(self)
        document['estimate'] = self.estimate.to_dict()
        return document


def _check_basis_index(basis_index: int):
    if basis_index not in PHASE_BASIS_INDICES:
        raise InvalidInputError(f"相位基矢索引必须为 1、2 或 3: {basis_index}")


def relabel_for_phase(state: PureState, basis_index: int) -> PureState:
    """局域翻转，使基矢 b 落到 |11>、其互补基矢 3 − b 落到 |00>"""
    _check_basis_index(basis_index)
    return PureState(_RELABEL[basis_index] @ state.amplitudes)


def invert_phase_output(output: float) -> PhaseEstimate:
    """
    由相位指示器输出反演 φ = 2·arccos(√output)

    Raises:
        NumericalError: 输出超出 [0, 1] 的幅度大于容差
    """
    if output < -OVERSHOOT_TOLERANCE or output > 1.0 + OVERSHOOT_TOLERANCE:
        raise NumericalError(f"相位指示器输出超出 [0, 1]: {output!r}")
    clamped = min(1.0, max(0.0, output))
    return PhaseEstimate(phi=2.0 * math.acos(math.sqrt(clamped)), raw_output=clamped)


def _phase_output(state: PureState, basis_index: int, evaluator: IndicatorEvaluator) -> float:
    return evaluator(relabel_for_phase(state, basis_index), OutputFunctional.projection(3))


def estimate_phase(state: PureState, basis_index: int, phase_schedule,
                   cfg: Optional[IntegrationConfig] = None) -> PhaseEstimate:
    """
    在一个拷贝上运行相位指示器并反演出相位

    Args:
        state: 输入态
        basis_index: 1 (ξ, |01>)、2 (θ, |10>) 或 3 (φ, |11>)
        phase_schedule: 相位指示器调度或求值器
        cfg: 积分配置

    Returns:
        相位估计，phi ∈ [0, π]，符号未定
    """
    evaluator = as_evaluator(phase_schedule, cfg)
    return invert_phase_output(_phase_output(state, basis_index, evaluator))


def phase_rotation(state: PureState, basis_index: int, phi: float) -> PureState:
    """把基矢 b 的振幅乘以 e^{−iφ}"""
    _check_basis_index(basis_index)
    amplitudes = np.array(state.amplitudes)
    amplitudes[basis_index] *= np.exp(-1j * phi)
    return PureState(amplitudes)


def corrected_entanglement(state: PureState, basis_index: int, phase_schedule, ent_schedule,
                           cfg: Optional[IntegrationConfig] = None,
                           sign_policy: SignPolicy = SignPolicy.PROBE) -> CorrectionResult:
    """
    双拷贝相位校正流程

    拷贝1估计相位；PROBE 策略下拷贝2、3分别旋转 +φ 与 −φ 并用相位指示器比较，
    最后在旋转后的拷贝上求纠缠指示器。模拟中同一输入态重复使用

    Args:
        state: 输入态
        basis_index: 要校正的相位所在基矢
        phase_schedule: 相位指示器调度或求值器
        ent_schedule: 纠缠指示器调度或求值器
        cfg: 积分配置
        sign_policy: 符号处理策略

    Returns:
        校正结果
    """
    sign_policy = SignPolicy(sign_policy)
    phase_evaluator = as_evaluator(phase_schedule, cfg)
    ent_evaluator = as_evaluator(ent_schedule, cfg)
    zz2 = OutputFunctional.zz_squared()

    estimate = estimate_phase(state, basis_index, phase_evaluator)
    applied = estimate.phi
    if sign_policy is SignPolicy.PROBE:
        if estimate.phi > 0.0:
            plus = _phase_output(phase_rotation(state, basis_index, estimate.phi), basis_index, phase_evaluator)
            minus = _phase_output(phase_rotation(state, basis_index, -estimate.phi), basis_index, phase_evaluator)
            applied = estimate.phi if plus >= minus else -estimate.phi
        estimate = PhaseEstimate(phi=estimate.phi, raw_output=estimate.raw_output, ambiguity_flag=False)

    rotated = phase_rotation(state, basis_index, applied)
    return CorrectionResult(
        uncorrected=ent_evaluator(state, zz2),
        corrected=ent_evaluator(rotated, zz2),
        oracle=entanglement_of_formation(state),
        estimate=estimate,
        applied_phase=applied
    )


def oscillation_model(kind: OscillationModel, magnitude: float, phi: float) -> float:
    """
    反常振荡的经验曲面

    Args:
        kind: BELL_MAGNITUDE 时 magnitude 为 a00，CONTAMINATED 时为 a01
        magnitude: 幅值参数
        phi: 相位
    """
    kind = OscillationModel(kind)
    if kind is OscillationModel.BELL_MAGNITUDE:
        return math.sin(2.0 * magnitude) ** 2 * math.cos(phi) ** 2
    return 0.9 * math.cos(1.3 * magnitude) ** 2 * math.cos(phi) ** 2
