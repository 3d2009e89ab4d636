"""
参数调度
五个时变哈密顿量参数 {K_A, K_B, ε_A, ε_B, ζ}(t) 的常数、傅里叶和采样表示，以及 JSON 读写
"""
import json
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import numpy as np

from ..core.hamiltonian import HamiltonianParams, PARAMETER_NAMES
from ..core.propagator import IntegrationConfig
from ..utils.exceptions import DataParsingError, InvalidInputError, OutputWriteError

_GRID_TOLERANCE = 1e-9
_DT_TOLERANCE = 1e-12

# 哈密顿量按 ħ = 1 以 rad/ns 计；以 GHz 给出的系数乘 2π
GHZ_TO_RAD_PER_NS = 2.0 * math.pi
UNIT_FACTORS: Dict[str, float] = {"rad/ns": 1.0, "GHz": GHZ_TO_RAD_PER_NS}


class ParameterSchedule(ABC):
    """参数调度基类"""

    form: str = ""

    @abstractmethod
    def evaluate(self, t: float) -> HamiltonianParams:
        """返回 t 时刻的哈密顿量参数"""
        pass

    @abstractmethod
    def sample(self, cfg: IntegrationConfig) -> np.ndarray:
        """返回所有子步时刻 j·dt/2 的采样，形状 (2N+1, 5)"""
        pass

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        pass

    def to_sampled(self, cfg: IntegrationConfig) -> "SampledSchedule":
        return SampledSchedule(dt=cfg.dt, values=self.sample(cfg))

    @abstractmethod
    def scaled(self, factor: float) -> "ParameterSchedule":
        """所有参数函数乘以 factor（频率不变）"""
        pass


@dataclass(frozen=True)
class FourierSeries:
    """f(t) = a0 + a1·cos(ωt) + b1·sin(ωt) + a2·cos(2ωt) + b2·sin(2ωt)"""
    a0: float = 0.0
    a1: float = 0.0
    b1: float = 0.0
    a2: float = 0.0
    b2: float = 0.0
    omega: float = 0.0

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not math.isfinite(float(value)):
                raise InvalidInputError(f"傅里叶系数 {name} 不是有限值: {value}")
            object.__setattr__(self, name, float(value))

    @property
    def harmonics(self) -> int:
        if self.a2 != 0.0 or self.b2 != 0.0:
            return 2
        return 1 if (self.a1 != 0.0 or self.b1 != 0.0) else 0

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        wt = self.omega * t
        return (self.a0 + self.a1 * np.cos(wt) + self.b1 * np.sin(wt)
                + self.a2 * np.cos(2.0 * wt) + self.b2 * np.sin(2.0 * wt))

    def scaled(self, factor: float) -> "FourierSeries":
        return FourierSeries(a0=self.a0 * factor, a1=self.a1 * factor, b1=self.b1 * factor,
                             a2=self.a2 * factor, b2=self.b2 * factor, omega=self.omega)

    @classmethod
    def constant(cls, value: float) -> "FourierSeries":
        return cls(a0=value)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FourierSeries":
        unknown = set(data) - {"a0", "a1", "b1", "a2", "b2", "omega"}
        if unknown:
            raise DataParsingError(f"未知的傅里叶系数: {sorted(unknown)}")
        try:
            return cls(**{key: float(value) for key, value in data.items()})
        except (TypeError, ValueError) as e:
            raise DataParsingError(f"傅里叶系数格式错误: {e}")

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


class ConstantSchedule(ParameterSchedule):
    """常数调度"""

    form = "constant"

    def __init__(self, params: HamiltonianParams):
        self.params = params

    def evaluate(self, t: float) -> HamiltonianParams:
        return self.params

    def sample(self, cfg: IntegrationConfig) -> np.ndarray:
        return np.tile(self.params.as_array(), (cfg.n_samples, 1))

    def scaled(self, factor: float) -> "ConstantSchedule":
        return ConstantSchedule(HamiltonianParams.from_array(self.params.as_array() * factor))

    def to_dict(self) -> Dict[str, Any]:
        return {'form': self.form, 'params': self.params.to_dict()}


class FourierSchedule(ParameterSchedule):
    """每个参数函数一个傅里叶级数"""

    form = "fourier"

    def __init__(self, functions: Mapping[str, FourierSeries]):
        missing = [name for name in PARAMETER_NAMES if name not in functions]
        if missing:
            raise InvalidInputError(f"傅里叶调度缺少参数函数: {missing}")
        self.functions: Dict[str, FourierSeries] = {name: functions[name] for name in PARAMETER_NAMES}

    @classmethod
    def symmetric(cls, K: FourierSeries, eps: FourierSeries, zeta: FourierSeries) -> "FourierSchedule":
        """A、B 两个比特共用同一组 K 和 ε 函数"""
        return cls({'K_A': K, 'K_B': K, 'eps_A': eps, 'eps_B': eps, 'zeta': zeta})

    def evaluate(self, t: float) -> HamiltonianParams:
        if not math.isfinite(t) or t < 0:
            raise InvalidInputError(f"时间必须为非负有限值: {t}")
        return HamiltonianParams(*[float(self.functions[name](t)) for name in PARAMETER_NAMES])

    def sample(self, cfg: IntegrationConfig) -> np.ndarray:
        times = cfg.sample_times()
        return np.stack([self.functions[name](times) for name in PARAMETER_NAMES], axis=1)

    def scaled(self, factor: float) -> "FourierSchedule":
        return FourierSchedule({name: series.scaled(factor) for name, series in self.functions.items()})

    def to_dict(self) -> Dict[str, Any]:
        return {
            'form': self.form,
            'functions': {name: series.to_dict() for name, series in self.functions.items()}
        }


class SampledSchedule(ParameterSchedule):
    """
    在 t = j·dt/2 (j = 0..2N) 处显式存储的采样调度

    中点采样单独存储，梯度索引与演化采样一一对应
    """

    form = "sampled"

    def __init__(self, dt: float, values: np.ndarray):
        values = np.array(values, dtype=float)
        if not (math.isfinite(dt) and dt > 0):
            raise InvalidInputError(f"采样调度的步长必须为正: {dt}")
        if values.ndim != 2 or values.shape[1] != 5:
            raise InvalidInputError(f"采样值形状必须为 (M, 5)，实际为 {values.shape}")
        if values.shape[0] < 3 or values.shape[0] % 2 == 0:
            raise InvalidInputError(f"采样点数必须是不小于3的奇数（端点+中点），实际为 {values.shape[0]}")
        if not np.all(np.isfinite(values)):
            raise InvalidInputError("采样值包含非有限值")
        values.setflags(write=False)
        self.dt = float(dt)
        self.values = values

    @property
    def n_steps(self) -> int:
        return (self.values.shape[0] - 1) // 2

    @property
    def t_final(self) -> float:
        return self.n_steps * self.dt

    def times(self) -> np.ndarray:
        return np.arange(self.values.shape[0]) * (self.dt / 2.0)

    def evaluate(self, t: float) -> HamiltonianParams:
        """只在子步时刻取存储值，不做插值"""
        position = t / (self.dt / 2.0)
        index = int(round(position))
        if not math.isfinite(t) or abs(position - index) > _GRID_TOLERANCE * max(1.0, abs(position)):
            raise InvalidInputError(f"时间 {t} 不在采样网格上 (间隔 {self.dt / 2.0})")
        if index < 0 or index >= self.values.shape[0]:
            raise InvalidInputError(f"时间 {t} 超出调度范围 [0, {self.t_final}]")
        return HamiltonianParams.from_array(self.values[index])

    def sample(self, cfg: IntegrationConfig) -> np.ndarray:
        if abs(cfg.dt - self.dt) > _DT_TOLERANCE * max(1.0, self.dt):
            raise InvalidInputError(f"调度步长 {self.dt} 与积分步长 {cfg.dt} 不符")
        if self.values.shape[0] < cfg.n_samples:
            raise InvalidInputError(f"调度只覆盖到 {self.t_final} ns，短于 t_final = {cfg.t_final} ns")
        return np.array(self.values[:cfg.n_samples])

    def scaled(self, factor: float) -> "SampledSchedule":
        return SampledSchedule(dt=self.dt, values=self.values * factor)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'form': self.form,
            'dt': self.dt,
            'parameters': list(PARAMETER_NAMES),
            'values': self.values.tolist()
        }


def evaluate(schedule: ParameterSchedule, t: float) -> HamiltonianParams:
    """调度在 t 时刻的参数"""
    return schedule.evaluate(t)


def to_sampled(schedule: ParameterSchedule, cfg: IntegrationConfig) -> SampledSchedule:
    """在所有子步时刻密集采样"""
    return schedule.to_sampled(cfg)


def schedule_from_dict(data: Mapping[str, Any]) -> ParameterSchedule:
    """
    由 JSON 文档构造调度

    Raises:
        DataParsingError: 文档格式错误
    """
    if not isinstance(data, Mapping):
        raise DataParsingError("调度文档必须是 JSON 对象")
    form = data.get('form')
    units = data.get('units', 'rad/ns')
    if not isinstance(units, str) or units not in UNIT_FACTORS:
        raise DataParsingError(f"未知的参数单位: {units!r}，可选 {sorted(UNIT_FACTORS)}")
    schedule: Optional[ParameterSchedule] = None
    try:
        if form == 'fourier':
            functions = data.get('functions')
            if not isinstance(functions, Mapping):
                raise DataParsingError("傅里叶调度缺少 functions 对象")
            schedule = FourierSchedule({name: FourierSeries.from_dict(value) for name, value in functions.items()})
        elif form == 'sampled':
            parameters = data.get('parameters', list(PARAMETER_NAMES))
            if list(parameters) != list(PARAMETER_NAMES):
                raise DataParsingError(f"采样调度的参数顺序必须为 {list(PARAMETER_NAMES)}")
            schedule = SampledSchedule(dt=float(data['dt']), values=np.asarray(data['values'], dtype=float))
        elif form == 'constant':
            schedule = ConstantSchedule(HamiltonianParams.from_dict(data.get('params', {})))
    except DataParsingError:
        raise
    except (KeyError, TypeError, ValueError, InvalidInputError) as e:
        raise DataParsingError(f"调度文档格式错误 ({form}): {e}")
    if schedule is None:
        raise DataParsingError(f"未知的调度形式: {form!r}")
    factor = UNIT_FACTORS[units]
    return schedule if factor == 1.0 else schedule.scaled(factor)


def load_schedule(path: Union[str, Path]) -> ParameterSchedule:
    """从 JSON 文件读取调度"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except OSError as e:
        raise DataParsingError(f"无法读取调度文件 {path}: {e}")
    except json.JSONDecodeError as e:
        raise DataParsingError(f"调度文件不是合法的 JSON {path}: {e}")
    return schedule_from_dict(data)


def save_schedule(schedule: ParameterSchedule, path: Union[str, Path],
                  extra: Optional[Dict[str, Any]] = None) -> Path:
    """把调度写入 JSON 文件，extra 中的键并入文档"""
    path = Path(path)
    document = schedule.to_dict()
    if extra:
        document.update(extra)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(document, f, indent=2, ensure_ascii=False)
    except OSError as e:
        raise OutputWriteError(f"写入调度文件失败: {e}", str(path))
    return path
