"""
自定义异常定义
定义项目中使用的各种自定义异常类型
"""
from typing import Any, Optional


class QnnWitnessError(Exception):
    """量子神经网络纠缠指示器的基础异常类"""
    pass


class InvalidInputError(QnnWitnessError):
    """无效参数相关异常（非有限参数、越界索引、非网格时间点等）"""
    pass


class InvalidStateError(QnnWitnessError):
    """量子态相关异常（未归一化的纯态、非法密度矩阵）"""
    pass


class ScheduleError(QnnWitnessError):
    """参数调度相关异常（无法解析的调度引用、网格不匹配）"""
    pass


class DataParsingError(QnnWitnessError):
    """数据解析相关异常（调度文件、态字面量格式错误）"""
    pass


class ConfigurationError(QnnWitnessError):
    """配置相关异常"""
    pass


class NumericalError(QnnWitnessError):
    """数值计算相关异常"""
    pass


class ConvergenceError(QnnWitnessError):
    """训练未收敛异常（严格模式下用尽轮数或学习率），携带训练报告"""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class TrainingDivergenceError(QnnWitnessError):
    """训练发散异常，携带中断时的训练报告"""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class UnknownExperimentError(QnnWitnessError):
    """未知实验名称异常"""
    pass


class OutputWriteError(QnnWitnessError):
    """输出文件写入相关异常"""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(f"{message} (路径: {path})" if path else message)
        self.path = path
