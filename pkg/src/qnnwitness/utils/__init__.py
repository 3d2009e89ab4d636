"""
qnnwitness 工具模块初始化
"""
from .logger import get_logger, setup_logging
from .config import config_manager, AppConfig, ConfigManager
from .metrics import metrics_collector, MetricsCollector
from .exceptions import (
    QnnWitnessError,
    InvalidInputError,
    InvalidStateError,
    ScheduleError,
    DataParsingError,
    ConfigurationError,
    NumericalError,
    ConvergenceError,
    TrainingDivergenceError,
    UnknownExperimentError,
    OutputWriteError
)

__all__ = [
    "get_logger",
    "setup_logging",
    "config_manager",
    "AppConfig",
    "ConfigManager",
    "metrics_collector",
    "MetricsCollector",
    "QnnWitnessError",
    "InvalidInputError",
    "InvalidStateError",
    "ScheduleError",
    "DataParsingError",
    "ConfigurationError",
    "NumericalError",
    "ConvergenceError",
    "TrainingDivergenceError",
    "UnknownExperimentError",
    "OutputWriteError"
]
