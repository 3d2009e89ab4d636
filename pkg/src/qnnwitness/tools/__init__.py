"""
命令行工具模块
"""
from .base import BaseTool
from .training import TrainingTool
from .evaluation import EvaluationTool
from .experiment import ExperimentTool
from .schedule import ScheduleTool

__all__ = [
    "BaseTool",
    "TrainingTool",
    "EvaluationTool",
    "ExperimentTool",
    "ScheduleTool"
]
