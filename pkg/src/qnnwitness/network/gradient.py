"""
训练梯度
损失 (target − output)² 对每个参数采样的梯度：离散伴随（逆向穿过 RK4 各级）与中心差分两种实现
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core.hamiltonian import GENERATORS
from ..core.propagator import IntegrationConfig, Propagator, liouvillian, rk4_maps
from ..core.states import as_density_matrix
from .training_sets import TrainingSample
from ..utils.exceptions import InvalidInputError
from ..utils.metrics import metrics_collector

FINITE_DIFFERENCE_STEP = 1e-7


@dataclass
class GradientResult:
    """单样本的输出、损失和梯度"""
    output: float
    loss: float
    gradient: np.ndarray  # 形状 (2N+1, 5)


def _adjoint_rhs(hamiltonian: np.ndarray, costate: np.ndarray) -> np.ndarray:
    """−i[H, ·] 在实内积下的伴随 i[H, Λ]"""
    return 1j * (hamiltonian @ costate - costate @ hamiltonian)


def _parameter_sensitivity(costate: np.ndarray, state: np.ndarray) -> np.ndarray:
    """Re tr(Λ†·(−i)[G_k, y])，对每个生成元 G_k，批量形状 (n, 5)"""
    costate_h = np.conj(np.swapaxes(costate, -1, -2))
    bracket = state @ costate_h - costate_h @ state
    return np.real(-1j * np.einsum('kab,nba->nk', GENERATORS, bracket))


def _check_grid(propagator: Propagator, cfg: IntegrationConfig):
    if propagator.cfg != cfg:
        raise InvalidInputError("演化算子与积分配置的网格不一致")


def loss_gradient(sample: TrainingSample, schedule, cfg: Optional[IntegrationConfig] = None,
                  propagator: Optional[Propagator] = None) -> GradientResult:
    """
    离散伴随梯度

    正向保存每步密度矩阵，从 Λ(t_f) = ∂L/∂ρ(t_f) 出发按 λ_j = M_j† λ_{j+1} 逆推，
    每步再逆向穿过 RK4 的四个级得到对起点、中点、终点三个采样的梯度

    Args:
        sample: 训练样本
        schedule: 参数调度或 (2N+1, 5) 采样
        cfg: 积分配置
        propagator: 可复用的演化算子（同一调度）

    Returns:
        输出、损失和梯度
    """
    cfg = cfg or IntegrationConfig()
    propagator = propagator or Propagator(schedule, cfg)
    _check_grid(propagator, cfg)
    metrics_collector.record_gradient()

    dt = cfg.dt
    n_steps = cfg.n_steps
    trajectory = propagator.trajectory(as_density_matrix(sample.input).entries)
    final = trajectory[-1]
    output = sample.functional.apply(final)
    loss = (sample.target - output) ** 2

    # λ_{j+1}，j = 0..N-1
    costates = np.empty((n_steps, 16), dtype=complex)
    current = sample.functional.loss_costate(final, sample.target).reshape(16)
    for j in range(n_steps - 1, -1, -1):
        costates[j] = current
        current = propagator.maps[j].conj().T @ current
    costates = costates.reshape(n_steps, 4, 4)

    h_start = propagator.hamiltonians[0:-1:2]
    h_mid = propagator.hamiltonians[1::2]
    h_end = propagator.hamiltonians[2::2]
    rho = trajectory[:-1]

    # 正向重建每步的四个级
    y1 = rho
    k1 = -1j * (h_start @ y1 - y1 @ h_start)
    y2 = rho + 0.5 * dt * k1
    k2 = -1j * (h_mid @ y2 - y2 @ h_mid)
    y3 = rho + 0.5 * dt * k2
    k3 = -1j * (h_mid @ y3 - y3 @ h_mid)
    y4 = rho + dt * k3

    g4 = dt / 6.0 * costates
    g3 = dt / 3.0 * costates
    g2 = dt / 3.0 * costates
    g1 = dt / 6.0 * costates

    gradient = np.zeros((cfg.n_samples, 5))
    gradient[2::2] += _parameter_sensitivity(g4, y4)
    g3 = g3 + dt * _adjoint_rhs(h_end, g4)
    gradient[1::2] += _parameter_sensitivity(g3, y3)
    g2 = g2 + 0.5 * dt * _adjoint_rhs(h_mid, g3)
    gradient[1::2] += _parameter_sensitivity(g2, y2)
    g1 = g1 + 0.5 * dt * _adjoint_rhs(h_mid, g2)
    gradient[0:-1:2] += _parameter_sensitivity(g1, y1)

    return GradientResult(output=output, loss=loss, gradient=gradient)


def finite_difference_gradient(sample: TrainingSample, schedule, cfg: Optional[IntegrationConfig] = None,
                               step: float = FINITE_DIFFERENCE_STEP,
                               propagator: Optional[Propagator] = None) -> GradientResult:
    """
    中心差分梯度

    扰动一个采样只改变一步（中点采样）或相邻两步（共享端点），
    利用保存的前缀态和后缀映射乘积，对每个参数批量求出全部采样的差分

    Args:
        sample: 训练样本
        schedule: 参数调度或采样
        cfg: 积分配置
        step: 差分步长
        propagator: 可复用的演化算子

    Returns:
        输出、损失和梯度
    """
    cfg = cfg or IntegrationConfig()
    propagator = propagator or Propagator(schedule, cfg)
    _check_grid(propagator, cfg)
    metrics_collector.record_gradient()

    dt = cfg.dt
    n_steps = cfg.n_steps
    states = propagator.trajectory(as_density_matrix(sample.input).entries).reshape(-1, 16)
    output = sample.functional.apply(states[-1].reshape(4, 4))
    loss = (sample.target - output) ** 2

    # suffix[j] = M_{N-1} ... M_j，suffix[N] = I
    suffix = np.empty((n_steps + 1, 16, 16), dtype=complex)
    suffix[n_steps] = np.eye(16)
    for j in range(n_steps - 1, -1, -1):
        suffix[j] = suffix[j + 1] @ propagator.maps[j]

    generators = liouvillian(propagator.hamiltonians)
    l_start, l_mid, l_end = generators[0:-1:2], generators[1::2], generators[2::2]

    def losses(final_vectors: np.ndarray) -> np.ndarray:
        outputs = sample.functional.apply_many(final_vectors.reshape(-1, 4, 4))
        return (sample.target - outputs) ** 2

    gradient = np.zeros((cfg.n_samples, 5))
    for k in range(5):
        delta = liouvillian(GENERATORS[k])
        shifted_losses = []
        for sign in (1.0, -1.0):
            shift = sign * step * delta
            # 中点采样 2j+1 只影响第 j 步
            mid_maps = rk4_maps(l_start, l_mid + shift, l_end, dt)
            mid_states = np.einsum('nab,nb->na', mid_maps, states[:-1])
            mid_final = np.einsum('nab,nb->na', suffix[1:], mid_states)

            # 端点采样 2j 影响第 j−1 步（作为终点）和第 j 步（作为起点）
            start_maps = rk4_maps(l_start + shift, l_mid, l_end, dt)
            end_maps = rk4_maps(l_start, l_mid, l_end + shift, dt)
            endpoint = np.empty((n_steps + 1, 16), dtype=complex)
            endpoint[0] = start_maps[0] @ states[0]
            shared = np.einsum('nab,nb->na', end_maps[:-1], states[:-2])
            endpoint[1:n_steps] = np.einsum('nab,nb->na', start_maps[1:], shared)
            endpoint[n_steps] = end_maps[-1] @ states[n_steps - 1]
            endpoint_final = np.einsum('nab,nb->na', suffix[1:], endpoint[:-1])

            per_sample = np.empty(cfg.n_samples)
            per_sample[1::2] = losses(mid_final)
            per_sample[0:-1:2] = losses(endpoint_final)
            per_sample[-1] = losses(endpoint[-1:])[0]
            shifted_losses.append(per_sample)
        gradient[:, k] = (shifted_losses[0] - shifted_losses[1]) / (2.0 * step)

    return GradientResult(output=output, loss=loss, gradient=gradient)
