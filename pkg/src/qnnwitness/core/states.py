"""
电荷基量子态
两比特纯态与密度矩阵的表示和校验，基矢顺序为 |00>, |01>, |10>, |11>（A 为第一个比特）
"""
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from ..utils.exceptions import InvalidStateError

CHARGE_BASIS_LABELS = ("00", "01", "10", "11")

NORM_TOLERANCE = 1e-12
DENSITY_TOLERANCE = 1e-9  # 厄米性与迹
PSD_TOLERANCE = 1e-10  # 最小本征值下界


def basis_vector(index: int) -> np.ndarray:
    """返回电荷基矢 |index> 的列向量"""
    if index not in range(4):
        raise InvalidStateError(f"基矢索引超出范围: {index}")
    vector = np.zeros(4, dtype=complex)
    vector[index] = 1.0
    return vector


@dataclass(frozen=True, eq=False)
class PureState:
    """
    两比特纯态

    amplitudes 依次为 a00, a01·e^{iξ}, a10·e^{iθ}, a11·e^{iφ}
    """
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.shape != (4,):
            raise InvalidStateError(f"纯态必须有4个振幅，实际为 {amplitudes.size}")
        if not np.all(np.isfinite(amplitudes)):
            raise InvalidStateError("纯态振幅包含非有限值")
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InvalidStateError(f"纯态未归一化: Σ|a|² = {norm!r}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def from_amplitudes(cls, values: Iterable[complex], normalize: bool = False) -> "PureState":
        """
        由振幅构造纯态

        Args:
            values: 4个复振幅
            normalize: 是否先归一化

        Returns:
            纯态
        """
        amplitudes = np.array(list(values), dtype=complex)
        if normalize:
            norm = np.linalg.norm(amplitudes)
            if not np.isfinite(norm) or norm == 0.0:
                raise InvalidStateError("零向量无法归一化")
            amplitudes = amplitudes / norm
        return cls(amplitudes)

    @classmethod
    def from_polar(cls, a00: float, a01: float, a10: float, a11: float,
                   xi: float = 0.0, theta: float = 0.0, phi: float = 0.0,
                   normalize: bool = False) -> "PureState":
        """由幅值和相对相位构造纯态: a00|00> + a01e^{iξ}|01> + a10e^{iθ}|10> + a11e^{iφ}|11>"""
        return cls.from_amplitudes(
            [a00, a01 * np.exp(1j * xi), a10 * np.exp(1j * theta), a11 * np.exp(1j * phi)],
            normalize=normalize
        )

    @property
    def magnitudes(self) -> np.ndarray:
        return np.abs(self.amplitudes)

    def canonical(self) -> "PureState":
        """去掉整体相位，使 |00> 的振幅为非负实数（a00 为零时保持不变）"""
        a00 = self.amplitudes[0]
        if abs(a00) == 0.0:
            return self
        return PureState(self.amplitudes * (abs(a00) / a00))

    def density_matrix(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def to_list(self) -> List[List[float]]:
        """转换为 [[实部, 虚部], ...] 列表，便于 JSON 输出"""
        return [[float(a.real), float(a.imag)] for a in self.amplitudes]

    def __repr__(self) -> str:
        return f"PureState({np.array2string(self.amplitudes, precision=6)})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """两比特密度矩阵，构造时只检查形状，validate() 检查物理性"""
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.shape != (4, 4):
            raise InvalidStateError(f"密度矩阵必须是 4×4，实际为 {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise InvalidStateError("密度矩阵包含非有限值")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def maximally_mixed(cls) -> "DensityMatrix":
        return cls(np.eye(4, dtype=complex) / 4.0)

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.entries @ self.entries)))

    @property
    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def validate(self, tolerance: float = DENSITY_TOLERANCE) -> "DensityMatrix":
        """
        检查厄米性、迹为1和半正定性

        Returns:
            自身，便于链式调用

        Raises:
            InvalidStateError: 不是合法的密度矩阵
        """
        if self.hermiticity_error > tolerance:
            raise InvalidStateError(f"密度矩阵不是厄米的: 偏差 {self.hermiticity_error:.3e}")
        if abs(self.trace - 1.0) > tolerance:
            raise InvalidStateError(f"密度矩阵的迹不为1: {self.trace}")
        smallest = float(np.linalg.eigvalsh(self.entries)[0])
        if smallest < -PSD_TOLERANCE:
            raise InvalidStateError(f"密度矩阵不是半正定的: 最小本征值 {smallest:.3e}")
        return self

    def is_valid(self, tolerance: float = DENSITY_TOLERANCE) -> bool:
        try:
            self.validate(tolerance)
        except InvalidStateError:
            return False
        return True


def as_density_matrix(value) -> DensityMatrix:
    """将纯态、密度矩阵或 4×4 数组统一为 DensityMatrix"""
    if isinstance(value, DensityMatrix):
        return value
    if isinstance(value, PureState):
        return value.density_matrix()
    return DensityMatrix(np.asarray(value))
