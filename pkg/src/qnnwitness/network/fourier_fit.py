"""
傅里叶级数拟合
对给定 ω 线性最小二乘求系数，ω 由粗网格搜索加黄金分割细化确定
"""
import math
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from ..core.hamiltonian import PARAMETER_NAMES
from .schedules import FourierSchedule, FourierSeries, SampledSchedule
from ..utils.exceptions import InvalidInputError
from ..utils.logger import get_logger

MIN_SAMPLES = 8
_REFINE_TOLERANCE = 1e-10
_FUNDAMENTAL_RATIO = 1e-6  # 基频系数相对二次谐波可忽略时视为 2ω 的单频级数


@dataclass
class FourierFit:
    """单个参数函数的拟合结果"""
    series: FourierSeries
    rms: float
    degenerate: bool = False
    omega_window: Tuple[float, float] = (0.0, 0.0)

    def to_dict(self):
        return {
            'coefficients': self.series.to_dict(),
            'rms': self.rms,
            'degenerate': self.degenerate,
            'omega_window': list(self.omega_window)
        }


@dataclass
class ScheduleFit:
    """五个参数函数的拟合结果"""
    schedule: FourierSchedule
    fits: Dict[str, FourierFit] = field(default_factory=dict)

    @property
    def rms(self) -> Dict[str, float]:
        return {name: fit.rms for name, fit in self.fits.items()}

    def to_dict(self):
        document = self.schedule.to_dict()
        document['fits'] = {name: fit.to_dict() for name, fit in self.fits.items()}
        return document


def _design_matrix(times: np.ndarray, omega: float, harmonics: int) -> np.ndarray:
    columns = [np.ones_like(times)]
    for n in range(1, harmonics + 1):
        columns.append(np.cos(n * omega * times))
        columns.append(np.sin(n * omega * times))
    return np.stack(columns, axis=1)


def _solve(times: np.ndarray, values: np.ndarray, omega: float, harmonics: int) -> Tuple[np.ndarray, float]:
    """给定 ω 的线性最小二乘，返回系数和 RMS 残差"""
    design = _design_matrix(times, omega, harmonics)
    coefficients, _, _, _ = np.linalg.lstsq(design, values, rcond=None)
    residual = values - design @ coefficients
    return coefficients, float(np.sqrt(np.mean(residual ** 2)))


def _series(coefficients: np.ndarray, omega: float) -> FourierSeries:
    padded = np.zeros(5)
    padded[:len(coefficients)] = coefficients
    a0, a1, b1, a2, b2 = padded
    if a2 != 0.0 or b2 != 0.0:
        if math.hypot(a1, b1) <= _FUNDAMENTAL_RATIO * math.hypot(a2, b2):
            return FourierSeries(a0=a0, a1=a2, b1=b2, omega=2.0 * omega)
    return FourierSeries(a0=a0, a1=a1, b1=b1, a2=a2, b2=b2, omega=omega)


def omega_window(t_span: float, dt: float) -> Tuple[float, float, float]:
    """ω 搜索窗口 [2π/(4T), 2π/(2·dt·10)] 及网格间距 π/(2T)"""
    return 2.0 * math.pi / (4.0 * t_span), 2.0 * math.pi / (2.0 * dt * 10.0), math.pi / (2.0 * t_span)


def fit_series(times, values, harmonics: int = 1,
               window: Optional[Tuple[float, float, float]] = None) -> FourierFit:
    """
    拟合单个函数

    Args:
        times: 采样时刻
        values: 采样值
        harmonics: 谐波数（1 或 2）
        window: (ω_min, ω_max, 网格间距)，默认由采样跨度和间隔确定

    Returns:
        拟合结果
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    logger = get_logger("fourier_fit")

    if harmonics not in (1, 2):
        raise InvalidInputError(f"谐波数必须为 1 或 2: {harmonics}")
    if times.shape != values.shape or times.ndim != 1:
        raise InvalidInputError("采样时刻与采样值形状不一致")
    if values.size < MIN_SAMPLES:
        raise InvalidInputError(f"拟合至少需要 {MIN_SAMPLES} 个采样，实际为 {values.size}")
    if not (np.all(np.isfinite(values)) and np.all(np.isfinite(times))):
        raise InvalidInputError("采样包含非有限值")

    if np.ptp(values) <= 1e-12 * max(float(np.max(np.abs(values))), np.finfo(float).tiny):
        mean = float(np.mean(values))
        residual = float(np.sqrt(np.mean((values - mean) ** 2)))
        return FourierFit(series=FourierSeries.constant(mean), rms=residual, degenerate=True)

    if window is None:
        steps = np.diff(times)
        window = omega_window(float(times[-1] - times[0]), 2.0 * float(np.min(steps)))
    omega_min, omega_max, spacing = window
    grid = np.arange(omega_min, omega_max + 0.5 * spacing, spacing)
    objective = np.array([_solve(times, values, omega, harmonics)[1] for omega in grid])
    best = int(np.argmin(objective))

    def rms_at(omega: float) -> float:
        return _solve(times, values, omega, harmonics)[1]

    omega = float(grid[best])
    if 0 < best < len(grid) - 1:
        try:
            result = minimize_scalar(
                rms_at, bracket=(grid[best - 1], grid[best], grid[best + 1]),
                method='golden', tol=_REFINE_TOLERANCE
            )
            omega = float(result.x)
        except ValueError:
            result = minimize_scalar(
                rms_at, bounds=(grid[best - 1], grid[best + 1]), method='bounded',
                options={'xatol': _REFINE_TOLERANCE}
            )
            omega = float(result.x)
    else:
        neighbour = grid[1] if best == 0 else grid[-2]
        result = minimize_scalar(
            rms_at, bounds=tuple(sorted((grid[best], neighbour))), method='bounded',
            options={'xatol': _REFINE_TOLERANCE}
        )
        omega = float(result.x)

    coefficients, rms = _solve(times, values, omega, harmonics)
    logger.debug(f"ω 搜索窗口 [{omega_min:.6g}, {omega_max:.6g}]，选定 ω = {omega:.10g}",
                 grid_points=len(grid), rms=rms)
    return FourierFit(series=_series(coefficients, omega), rms=rms, omega_window=(omega_min, omega_max))


def fit_fourier(samples: SampledSchedule,
                harmonics: Union[int, Mapping[str, int]] = 1) -> ScheduleFit:
    """
    拟合采样调度的全部五个参数函数

    Args:
        samples: 采样调度
        harmonics: 统一的谐波数，或按参数名给出的谐波数

    Returns:
        傅里叶调度和每个函数的残差
    """
    logger = get_logger("fourier_fit")
    times = samples.times()
    window = omega_window(samples.t_final, samples.dt)
    fits: Dict[str, FourierFit] = {}
    for index, name in enumerate(PARAMETER_NAMES):
        order = harmonics if isinstance(harmonics, int) else int(harmonics.get(name, 1))
        fits[name] = fit_series(times, samples.values[:, index], order, window)
        logger.info(f"参数函数 {name} 拟合完成", omega=fits[name].series.omega,
                    rms=fits[name].rms, degenerate=fits[name].degenerate)
    schedule = FourierSchedule({name: fit.series for name, fit in fits.items()})
    return ScheduleFit(schedule=schedule, fits=fits)
