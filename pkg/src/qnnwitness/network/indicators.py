"""
网络输出泛函与指示器求值
输出为 ⟨σzAσzB⟩²（纠缠指示器）或基矢投影概率 |⟨b|ψ(t_f)⟩|²（相位指示器）
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np

from ..core.hamiltonian import ZZ
from ..core.propagator import IntegrationConfig, Propagator
from ..core.states import CHARGE_BASIS_LABELS, DensityMatrix, PureState, as_density_matrix
from ..utils.exceptions import DataParsingError, InvalidInputError


class FunctionalKind(str, Enum):
    """输出泛函类型"""
    ZZ_SQUARED = "zz2"
    PROJECTION = "proj"


@dataclass(frozen=True)
class OutputFunctional:
    """网络的输出泛函"""
    kind: FunctionalKind = FunctionalKind.ZZ_SQUARED
    basis_index: int = 3

    def __post_init__(self):
        object.__setattr__(self, "kind", FunctionalKind(self.kind))
        if self.kind is FunctionalKind.PROJECTION and self.basis_index not in range(4):
            raise InvalidInputError(f"投影基矢索引超出范围: {self.basis_index}")

    @classmethod
    def zz_squared(cls) -> "OutputFunctional":
        return cls(FunctionalKind.ZZ_SQUARED)

    @classmethod
    def projection(cls, basis_index: int = 3) -> "OutputFunctional":
        return cls(FunctionalKind.PROJECTION, basis_index)

    @classmethod
    def from_literal(cls, literal: str) -> "OutputFunctional":
        """解析 "zz2" 或 "proj:N"（N 为 0..3 或 00/01/10/11）"""
        text = literal.strip().lower()
        if text == FunctionalKind.ZZ_SQUARED.value:
            return cls.zz_squared()
        if text.startswith("proj:"):
            index_text = text.split(":", 1)[1]
            if index_text in CHARGE_BASIS_LABELS:
                return cls.projection(CHARGE_BASIS_LABELS.index(index_text))
            try:
                return cls.projection(int(index_text))
            except ValueError:
                pass
        raise DataParsingError(f"无法解析输出泛函: {literal!r}（可用 zz2 或 proj:N）")

    @property
    def label(self) -> str:
        if self.kind is FunctionalKind.ZZ_SQUARED:
            return "zz2"
        return f"proj:{self.basis_index}"

    def apply(self, rho: np.ndarray) -> float:
        """对末态密度矩阵求输出值"""
        if self.kind is FunctionalKind.ZZ_SQUARED:
            x = float(np.real(np.trace(rho @ ZZ)))
            return x * x
        return float(np.real(rho[self.basis_index, self.basis_index]))

    def apply_many(self, rhos: np.ndarray) -> np.ndarray:
        """批量求值，rhos 形状 (n, 4, 4)"""
        if self.kind is FunctionalKind.ZZ_SQUARED:
            x = np.real(np.einsum('nii,i->n', rhos, np.diag(ZZ)))
            return x * x
        return np.real(rhos[:, self.basis_index, self.basis_index])

    def loss_costate(self, rho: np.ndarray, target: float) -> np.ndarray:
        """
        损失 (target − output)² 对 ρ(t_f) 的导数（实内积 Re tr(Λ†δρ) 意义下）

        Returns:
            4×4 伴随矩阵 Λ(t_f)
        """
        output = self.apply(rho)
        scale = -2.0 * (target - output)
        if self.kind is FunctionalKind.ZZ_SQUARED:
            x = float(np.real(np.trace(rho @ ZZ)))
            return scale * 2.0 * x * ZZ
        costate = np.zeros((4, 4), dtype=complex)
        costate[self.basis_index, self.basis_index] = scale
        return costate


class IndicatorEvaluator:
    """缓存同一调度的总演化映射，批量求指示器输出"""

    def __init__(self, schedule, cfg: Optional[IntegrationConfig] = None):
        self.cfg = cfg or IntegrationConfig()
        self.propagator = Propagator(schedule, self.cfg)

    def final_state(self, state: Union[PureState, DensityMatrix]) -> np.ndarray:
        return self.propagator.final_state(as_density_matrix(state).entries)

    def __call__(self, state: Union[PureState, DensityMatrix], functional: OutputFunctional) -> float:
        return functional.apply(self.final_state(state))

    def evaluate_many(self, states: Sequence[PureState], functional: OutputFunctional) -> np.ndarray:
        if not states:
            return np.zeros(0)
        rhos = np.stack([as_density_matrix(state).entries for state in states])
        return functional.apply_many(self.propagator.final_states(rhos))


def as_evaluator(schedule, cfg: Optional[IntegrationConfig] = None) -> IndicatorEvaluator:
    """调度或已有求值器统一为求值器"""
    if isinstance(schedule, IndicatorEvaluator):
        return schedule
    return IndicatorEvaluator(schedule, cfg)


def evaluate_indicator(state: Union[PureState, DensityMatrix], schedule,
                       functional: OutputFunctional,
                       cfg: Optional[IntegrationConfig] = None) -> float:
    """
    演化后施加输出泛函

    Args:
        state: 输入态
        schedule: 参数调度、采样数组或 IndicatorEvaluator
        functional: 输出泛函
        cfg: 积分配置

    Returns:
        [0, 1] 中的输出值
    """
    return as_evaluator(schedule, cfg)(state, functional)
