"""
运行指标收集器
监控和收集传播、梯度、训练与扫描相关的计数和耗时
"""
import time
import threading
from typing import Dict, Any
from dataclasses import dataclass, asdict
from collections import deque
import json


@dataclass
class SimulationMetrics:
    """运行指标数据类"""
    # 数值计算相关指标
    propagations: int = 0
    gradient_evaluations: int = 0
    errors: int = 0

    # 训练相关指标
    epochs_completed: int = 0
    learning_rate_backoffs: int = 0
    avg_epoch_time: float = 0.0

    # 扫描相关指标
    sweep_points: int = 0

    # 时间相关指标
    total_uptime: float = 0.0
    last_update_time: float = 0.0


class MetricsCollector:
    """运行指标收集器"""

    def __init__(self):
        """初始化运行指标收集器"""
        self.metrics = SimulationMetrics()
        self.start_time = time.time()
        self.epoch_times = deque(maxlen=100)  # 最近100个训练轮次的耗时
        self.lock = threading.Lock()

    def start_timer(self) -> float:
        """
        开始计时

        Returns:
            开始时间戳
        """
        return time.perf_counter()

    def end_epoch(self, start_time: float) -> float:
        """
        结束一个训练轮次的计时

        Args:
            start_time: 开始时间戳

        Returns:
            经过的时间（秒）
        """
        elapsed = time.perf_counter() - start_time
        with self.lock:
            self.epoch_times.append(elapsed)
            self.metrics.epochs_completed += 1
            self.metrics.avg_epoch_time = sum(self.epoch_times) / len(self.epoch_times)
            self.metrics.last_update_time = time.time()
        return elapsed

    def record_propagation(self, count: int = 1) -> None:
        """
        记录密度矩阵传播次数

        Args:
            count: 传播次数
        """
        with self.lock:
            self.metrics.propagations += count
            self.metrics.last_update_time = time.time()

    def record_gradient(self) -> None:
        """记录一次梯度计算"""
        with self.lock:
            self.metrics.gradient_evaluations += 1
            self.metrics.last_update_time = time.time()

    def record_backoff(self) -> None:
        """记录一次学习率减半"""
        with self.lock:
            self.metrics.learning_rate_backoffs += 1
            self.metrics.last_update_time = time.time()

    def record_sweep_points(self, count: int) -> None:
        """
        记录扫描点数

        Args:
            count: 本次扫描完成的点数
        """
        with self.lock:
            self.metrics.sweep_points += count
            self.metrics.last_update_time = time.time()

    def record_error(self) -> None:
        """记录错误"""
        with self.lock:
            self.metrics.errors += 1
            self.metrics.last_update_time = time.time()

    def get_uptime(self) -> float:
        """
        获取运行时间

        Returns:
            运行时间（秒）
        """
        return time.time() - self.start_time

    def get_metrics(self) -> Dict[str, Any]:
        """
        获取当前所有运行指标

        Returns:
            运行指标字典
        """
        with self.lock:
            self.metrics.total_uptime = self.get_uptime()
            metrics_dict = asdict(self.metrics)
            if self.metrics.epochs_completed > 0:
                metrics_dict['gradients_per_epoch'] = self.metrics.gradient_evaluations / self.metrics.epochs_completed
            else:
                metrics_dict['gradients_per_epoch'] = 0
            return metrics_dict

    def reset_metrics(self) -> None:
        """重置所有指标"""
        with self.lock:
            self.metrics = SimulationMetrics()
            self.epoch_times.clear()
            self.start_time = time.time()
            self.metrics.last_update_time = time.time()

    def get_formatted_metrics(self) -> str:
        """
        获取格式化的运行指标字符串

        Returns:
            格式化的运行指标字符串
        """
        return json.dumps(self.get_metrics(), indent=2, ensure_ascii=False)


# 全局运行指标收集器实例
metrics_collector = MetricsCollector()
