"""
密度矩阵时间演化
固定步长经典 RK4 积分 dρ/dt = −i[H(t), ρ]，每步在 t、t+dt/2、t+dt 处采样参数
"""
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.linalg import expm

from .hamiltonian import hamiltonians, ZZ
from .states import DensityMatrix, PureState, as_density_matrix
from ..utils.exceptions import InvalidInputError
from ..utils.metrics import metrics_collector

_GRID_TOLERANCE = 1e-9
_IDENTITY4 = np.eye(4, dtype=complex)
_IDENTITY16 = np.eye(16, dtype=complex)


@dataclass(frozen=True)
class IntegrationConfig:
    """积分配置，n_steps = t_final / dt 必须为整数"""
    dt: float = 0.05
    t_final: float = 190.0

    def __post_init__(self):
        if not (np.isfinite(self.dt) and self.dt > 0):
            raise InvalidInputError(f"积分步长必须为正: {self.dt}")
        if not (np.isfinite(self.t_final) and self.t_final > 0):
            raise InvalidInputError(f"演化时间必须为正: {self.t_final}")
        ratio = self.t_final / self.dt
        if abs(ratio - round(ratio)) > _GRID_TOLERANCE * max(1.0, ratio):
            raise InvalidInputError(f"t_final/dt 不是整数: {self.t_final}/{self.dt}")

    @classmethod
    def from_settings(cls, settings) -> "IntegrationConfig":
        return cls(dt=float(settings.dt), t_final=float(settings.t_final))

    @property
    def n_steps(self) -> int:
        return int(round(self.t_final / self.dt))

    @property
    def n_samples(self) -> int:
        """每步端点与中点的采样总数"""
        return 2 * self.n_steps + 1

    def sample_times(self) -> np.ndarray:
        return np.arange(self.n_samples) * (self.dt / 2.0)

    def to_dict(self):
        return {'dt': self.dt, 't_final': self.t_final, 'n_steps': self.n_steps}


def commutator_rhs(hamiltonian: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """−i[H, ρ]，支持批量"""
    return -1j * (hamiltonian @ rho - rho @ hamiltonian)


def rk4_step(rho: Union[DensityMatrix, np.ndarray], h_t: np.ndarray, dt: float) -> DensityMatrix:
    """
    单个 RK4 步

    Args:
        rho: 当前密度矩阵
        h_t: t、t+dt/2、t+dt 处的哈密顿量，形状 (3, 4, 4)；给定单个 4×4 矩阵时视为常数
        dt: 步长

    Returns:
        下一时刻的密度矩阵
    """
    if dt <= 0:
        raise InvalidInputError(f"步长必须为正: {dt}")
    rho = as_density_matrix(rho).entries
    h_t = np.asarray(h_t, dtype=complex)
    if h_t.shape == (4, 4):
        h_t = np.stack([h_t, h_t, h_t])
    if h_t.shape != (3, 4, 4):
        raise InvalidInputError(f"哈密顿量采样形状必须为 (3, 4, 4)，实际为 {h_t.shape}")
    h_start, h_mid, h_end = h_t
    k1 = commutator_rhs(h_start, rho)
    k2 = commutator_rhs(h_mid, rho + 0.5 * dt * k1)
    k3 = commutator_rhs(h_mid, rho + 0.5 * dt * k2)
    k4 = commutator_rhs(h_end, rho + dt * k3)
    return DensityMatrix(rho + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4))


def liouvillian(hamiltonian: np.ndarray) -> np.ndarray:
    """
    行优先 vec(ρ) 下的刘维尔超算符 L = −i(H⊗I − I⊗Hᵀ)

    Args:
        hamiltonian: 形状 (..., 4, 4)

    Returns:
        形状 (..., 16, 16)
    """
    hamiltonian = np.asarray(hamiltonian, dtype=complex)
    batch = hamiltonian.shape[:-2]
    left = np.einsum('...ik,jl->...ijkl', hamiltonian, _IDENTITY4)
    right = np.einsum('ik,...lj->...ijkl', _IDENTITY4, hamiltonian)
    return (-1j * (left - right)).reshape(batch + (16, 16))


def rk4_maps(l_start: np.ndarray, l_mid: np.ndarray, l_end: np.ndarray, dt: float) -> np.ndarray:
    """由三个采样点的刘维尔超算符构造 RK4 一步的线性映射"""
    p1 = _IDENTITY16 + 0.5 * dt * l_start
    b_p1 = l_mid @ p1
    p2 = _IDENTITY16 + 0.5 * dt * b_p1
    b_p2 = l_mid @ p2
    p3 = _IDENTITY16 + dt * b_p2
    return _IDENTITY16 + dt / 6.0 * (l_start + 2.0 * b_p1 + 2.0 * b_p2 + l_end @ p3)


def step_maps(h_samples: np.ndarray, dt: float) -> np.ndarray:
    """
    所有 RK4 步的 16×16 映射

    Args:
        h_samples: 形状 (2N+1, 4, 4) 的哈密顿量采样
        dt: 步长

    Returns:
        形状 (N, 16, 16)，第 j 个映射把 vec(ρ_j) 变为 vec(ρ_{j+1})
    """
    generators = liouvillian(h_samples)
    return rk4_maps(generators[0:-1:2], generators[1::2], generators[2::2], dt)


def schedule_samples(schedule, cfg: IntegrationConfig) -> np.ndarray:
    """取得调度在所有子步时刻的参数采样，形状 (2N+1, 5)"""
    if hasattr(schedule, "sample"):
        samples = schedule.sample(cfg)
    else:
        samples = np.asarray(schedule, dtype=float)
    if samples.shape != (cfg.n_samples, 5):
        raise InvalidInputError(
            f"参数采样形状 {samples.shape} 与积分网格不符，需要 ({cfg.n_samples}, 5)"
        )
    return samples


class Propagator:
    """固定调度下的演化算子，缓存每步映射和总映射"""

    def __init__(self, schedule, cfg: Optional[IntegrationConfig] = None):
        """
        初始化演化算子

        Args:
            schedule: 参数调度（带 sample 方法）或 (2N+1, 5) 采样数组
            cfg: 积分配置
        """
        self.cfg = cfg or IntegrationConfig()
        self.samples = schedule_samples(schedule, self.cfg)
        self.hamiltonians = hamiltonians(self.samples)
        self.maps = step_maps(self.hamiltonians, self.cfg.dt)
        self._total: Optional[np.ndarray] = None

    @property
    def total_map(self) -> np.ndarray:
        if self._total is None:
            total = _IDENTITY16.copy()
            for step_map in self.maps:
                total = step_map @ total
            self._total = total
        return self._total

    def final_state(self, rho0: np.ndarray) -> np.ndarray:
        metrics_collector.record_propagation()
        return (self.total_map @ np.asarray(rho0, dtype=complex).reshape(16)).reshape(4, 4)

    def final_states(self, rhos: np.ndarray) -> np.ndarray:
        """批量演化形状 (n, 4, 4) 的初态"""
        rhos = np.asarray(rhos, dtype=complex)
        metrics_collector.record_propagation(len(rhos))
        return (rhos.reshape(-1, 16) @ self.total_map.T).reshape(-1, 4, 4)

    def trajectory(self, rho0: np.ndarray) -> np.ndarray:
        """返回每个步点的密度矩阵，形状 (N+1, 4, 4)"""
        metrics_collector.record_propagation()
        states = np.empty((self.cfg.n_steps + 1, 16), dtype=complex)
        states[0] = np.asarray(rho0, dtype=complex).reshape(16)
        for j, step_map in enumerate(self.maps):
            states[j + 1] = step_map @ states[j]
        return states.reshape(-1, 4, 4)


def propagate(psi0: Union[PureState, DensityMatrix], schedule,
              cfg: Optional[IntegrationConfig] = None,
              trajectory: bool = False) -> Union[DensityMatrix, np.ndarray]:
    """
    从初态演化到 t_final

    Args:
        psi0: 初始纯态（或密度矩阵）
        schedule: 参数调度或采样数组
        cfg: 积分配置
        trajectory: 为 True 时返回全部步点的密度矩阵 (N+1, 4, 4)

    Returns:
        ρ(t_f) 或完整轨迹
    """
    rho0 = as_density_matrix(psi0).entries
    propagator = Propagator(schedule, cfg)
    if trajectory:
        return propagator.trajectory(rho0)
    return DensityMatrix(propagator.final_state(rho0))


def _real_observable(value: complex, label: str) -> float:
    if abs(value.imag) > 1e-12:
        raise InvalidInputError(f"{label} 的虚部过大: {value.imag:.3e}")
    return float(value.real)


def expectation_zz(rho: Union[DensityMatrix, np.ndarray]) -> float:
    """tr(ρ·σzA⊗σzB)"""
    entries = as_density_matrix(rho).entries
    return _real_observable(complex(np.trace(entries @ ZZ)), "⟨σzσz⟩")


def projection_probability(rho: Union[DensityMatrix, np.ndarray], basis_index: int) -> float:
    """⟨b|ρ|b⟩"""
    if basis_index not in range(4):
        raise InvalidInputError(f"基矢索引超出范围: {basis_index}")
    entries = as_density_matrix(rho).entries
    return _real_observable(complex(entries[basis_index, basis_index]), f"⟨{basis_index}|ρ|{basis_index}⟩")


def constant_schedule_oracle(psi0: Union[PureState, DensityMatrix], hamiltonian: np.ndarray,
                             t: float) -> DensityMatrix:
    """常数哈密顿量下的精确演化 e^{−iHt} ρ e^{iHt}"""
    rho0 = as_density_matrix(psi0).entries
    unitary = expm(-1j * np.asarray(hamiltonian, dtype=complex) * t)
    return DensityMatrix(unitary @ rho0 @ unitary.conj().T)

