"""
网络训练
对参数采样做梯度下降：在线模式逐样本更新，批量模式按固定顺序累加梯度；
每轮结束后重新计算 RMS，若变差则学习率减半并回退到最佳调度
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.propagator import IntegrationConfig, Propagator
from ..core.states import as_density_matrix
from .gradient import GradientResult, finite_difference_gradient, loss_gradient
from .schedules import ParameterSchedule, SampledSchedule
from .training_sets import TrainingSample
from ..utils.exceptions import ConvergenceError, InvalidInputError, TrainingDivergenceError
from ..utils.logger import get_logger
from ..utils.metrics import metrics_collector

DIVERGENCE_FACTOR = 10.0
LEARNING_RATE_FLOOR = 1e-12  # 相对初始学习率


@dataclass(frozen=True)
class TrainingConfig:
    """训练配置"""
    learning_rate: float = 0.5
    max_epochs: int = 5000
    rms_stop: float = 1e-4
    mode: str = "online"  # online, batch
    gradient: str = "adjoint"  # adjoint, finite_difference
    workers: int = 1
    strict: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.learning_rate) and self.learning_rate > 0):
            raise InvalidInputError(f"学习率必须为正: {self.learning_rate}")
        if self.max_epochs < 0:
            raise InvalidInputError(f"最大轮数不能为负: {self.max_epochs}")
        if not (math.isfinite(self.rms_stop) and self.rms_stop > 0):
            raise InvalidInputError(f"停止阈值必须为正: {self.rms_stop}")
        if self.mode not in ("online", "batch"):
            raise InvalidInputError(f"未知的训练模式: {self.mode}")
        if self.gradient not in ("adjoint", "finite_difference"):
            raise InvalidInputError(f"未知的梯度方法: {self.gradient}")
        if self.workers < 1:
            raise InvalidInputError(f"线程数至少为1: {self.workers}")

    @classmethod
    def from_settings(cls, settings) -> "TrainingConfig":
        return cls(
            learning_rate=settings.learning_rate,
            max_epochs=settings.max_epochs,
            rms_stop=settings.rms_stop,
            mode=settings.mode,
            gradient=settings.gradient,
            workers=settings.workers,
            strict=settings.strict
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class TrainingReport:
    """
    训练报告

    rms_history[0] 为训练前的 RMS，之后每轮一个值（未强制单调）
    """
    rms_history: List[float]
    schedule: SampledSchedule
    outputs: List[float]
    targets: List[float]
    labels: List[str]
    epochs: int
    converged: bool
    stop_reason: str
    learning_rate_initial: float
    learning_rate_final: float
    backoffs: int = 0
    config: Dict[str, Any] = field(default_factory=dict)

    @property
    def initial_rms(self) -> float:
        return self.rms_history[0]

    @property
    def final_rms(self) -> float:
        return rms(self.outputs, self.targets)

    @property
    def symmetry(self) -> Dict[str, float]:
        """
        A、B 两个比特参数函数的最大差，相对于该对函数的最大绝对值

        训练不约束对称性，结果接近0说明两比特学到了相同的函数
        """
        values = self.schedule.values
        ratios = {}
        for name, (a, b) in (('K', (0, 1)), ('eps', (2, 3))):
            scale = float(np.max(np.abs(values[:, [a, b]])))
            difference = float(np.max(np.abs(values[:, a] - values[:, b])))
            ratios[name] = difference / scale if scale > 0 else 0.0
        return ratios

    def to_dict(self, include_schedule: bool = True) -> Dict[str, Any]:
        document = {
            'converged': self.converged,
            'stop_reason': self.stop_reason,
            'epochs': self.epochs,
            'initial_rms': self.initial_rms,
            'final_rms': self.final_rms,
            'rms_history': list(self.rms_history),
            'symmetry': self.symmetry,
            'learning_rate_initial': self.learning_rate_initial,
            'learning_rate_final': self.learning_rate_final,
            'backoffs': self.backoffs,
            'samples': [
                {'label': label, 'target': target, 'output': output}
                for label, target, output in zip(self.labels, self.targets, self.outputs)
            ],
            'config': dict(self.config),
            'metrics': metrics_collector.get_metrics()
        }
        if include_schedule:
            document['schedule'] = self.schedule.to_dict()
        return document


def rms(outputs: Sequence[float], targets: Sequence[float]) -> float:
    """sqrt(mean((target − output)²))"""
    residual = np.asarray(targets, dtype=float) - np.asarray(outputs, dtype=float)
    return float(np.sqrt(np.mean(residual ** 2)))


class QnnTrainer:
    """量子神经网络训练器"""

    def __init__(self, tcfg: Optional[TrainingConfig] = None, cfg: Optional[IntegrationConfig] = None):
        """
        初始化训练器

        Args:
            tcfg: 训练配置
            cfg: 积分配置
        """
        self.tcfg = tcfg or TrainingConfig()
        self.cfg = cfg or IntegrationConfig()
        self.logger = get_logger("qnn_trainer")
        self._gradient: Callable[..., GradientResult] = (
            loss_gradient if self.tcfg.gradient == "adjoint" else finite_difference_gradient
        )

    def evaluate(self, samples: Sequence[TrainingSample], values: np.ndarray) -> Tuple[float, List[float]]:
        """当前调度下的 RMS 和每个样本的输出"""
        propagator = Propagator(values, self.cfg)
        outputs = [
            sample.functional.apply(propagator.final_state(as_density_matrix(sample.input).entries))
            for sample in samples
        ]
        return rms(outputs, [sample.target for sample in samples]), outputs

    def _online_epoch(self, samples: Sequence[TrainingSample], values: np.ndarray, lr: float) -> np.ndarray:
        for sample in samples:
            values = values - lr * self._gradient(sample, values, self.cfg).gradient
        return values

    def _batch_epoch(self, samples: Sequence[TrainingSample], values: np.ndarray, lr: float) -> np.ndarray:
        propagator = Propagator(values, self.cfg)

        def gradient_of(sample: TrainingSample) -> np.ndarray:
            return self._gradient(sample, values, self.cfg, propagator=propagator).gradient

        if self.tcfg.workers > 1:
            with ThreadPoolExecutor(max_workers=self.tcfg.workers) as executor:
                gradients = list(executor.map(gradient_of, samples))
        else:
            gradients = [gradient_of(sample) for sample in samples]

        total = np.zeros_like(values)
        for gradient in gradients:
            total += gradient
        return values - lr * total

    def train(self, samples: Sequence[TrainingSample], init: ParameterSchedule) -> TrainingReport:
        """
        训练

        Args:
            samples: 训练样本（非空）
            init: 初始调度

        Returns:
            训练报告，调度为 RMS 最小的那一轮

        Raises:
            TrainingDivergenceError: RMS 超过初始值的10倍
            ConvergenceError: 严格模式下未达到 rms_stop
        """
        if not samples:
            raise InvalidInputError("训练样本不能为空")

        values = np.array(init.sample(self.cfg), dtype=float)
        lr = self.tcfg.learning_rate
        initial_rms, outputs = self.evaluate(samples, values)
        history = [initial_rms]
        best_rms, best_values, best_outputs = initial_rms, values, outputs
        backoffs = 0
        epochs = 0
        stop_reason = "max_epochs"

        self.logger.info(f"开始训练: {len(samples)} 个样本，初始 RMS = {initial_rms:.6g}",
                         learning_rate=lr, mode=self.tcfg.mode, gradient=self.tcfg.gradient)

        def report(reason: str) -> TrainingReport:
            return TrainingReport(
                rms_history=history,
                schedule=SampledSchedule(self.cfg.dt, best_values),
                outputs=list(best_outputs),
                targets=[sample.target for sample in samples],
                labels=[sample.label for sample in samples],
                epochs=epochs,
                converged=best_rms <= self.tcfg.rms_stop,
                stop_reason=reason,
                learning_rate_initial=self.tcfg.learning_rate,
                learning_rate_final=lr,
                backoffs=backoffs,
                config={'training': self.tcfg.to_dict(), 'integration': self.cfg.to_dict()}
            )

        if initial_rms <= self.tcfg.rms_stop:
            stop_reason = "rms_stop"
        else:
            for epoch in range(1, self.tcfg.max_epochs + 1):
                start_time = metrics_collector.start_timer()
                if self.tcfg.mode == "online":
                    candidate = self._online_epoch(samples, best_values, lr)
                else:
                    candidate = self._batch_epoch(samples, best_values, lr)
                epoch_rms, epoch_outputs = self.evaluate(samples, candidate)
                history.append(epoch_rms)
                epochs = epoch
                metrics_collector.end_epoch(start_time)

                if not math.isfinite(epoch_rms) or epoch_rms > DIVERGENCE_FACTOR * initial_rms:
                    self.logger.error(f"训练发散: 第 {epoch} 轮 RMS = {epoch_rms:.6g}",
                                      initial_rms=initial_rms, learning_rate=lr)
                    raise TrainingDivergenceError(
                        f"第 {epoch} 轮 RMS {epoch_rms:.6g} 超过初始值 {initial_rms:.6g} 的 {DIVERGENCE_FACTOR:g} 倍",
                        report("diverged")
                    )

                if epoch_rms <= best_rms:
                    best_rms, best_values, best_outputs = epoch_rms, candidate, epoch_outputs
                else:
                    lr *= 0.5
                    backoffs += 1
                    metrics_collector.record_backoff()
                    self.logger.warning(f"第 {epoch} 轮 RMS 上升，学习率减半并回退",
                                        rms=epoch_rms, best_rms=best_rms, learning_rate=lr)

                if epoch % 100 == 0:
                    self.logger.debug(f"第 {epoch} 轮", rms=epoch_rms, best_rms=best_rms, learning_rate=lr)

                if best_rms <= self.tcfg.rms_stop:
                    stop_reason = "rms_stop"
                    break
                if lr < LEARNING_RATE_FLOOR * self.tcfg.learning_rate:
                    stop_reason = "learning_rate_floor"
                    break

        result = report(stop_reason)
        self.logger.info(f"训练结束: {stop_reason}，{epochs} 轮，RMS = {best_rms:.6g}",
                         converged=result.converged, learning_rate=lr, backoffs=backoffs)
        if self.tcfg.strict and not result.converged:
            raise ConvergenceError(
                f"{stop_reason}: {epochs} 轮后 RMS {best_rms:.6g} 未达到 {self.tcfg.rms_stop:g}", result
            )
        return result


def train(samples: Sequence[TrainingSample], init: ParameterSchedule,
          tcfg: Optional[TrainingConfig] = None,
          cfg: Optional[IntegrationConfig] = None) -> TrainingReport:
    """按训练配置训练，返回训练报告"""
    return QnnTrainer(tcfg, cfg).train(samples, init)
