"""
门面模块：命令行与计算层之间的参数转换、异常转换和工具协调
"""
from .exception_handler import ExceptionHandler, EXIT_SUCCESS, EXIT_FAILURE, EXIT_USAGE
from .parameter_converter import ParameterConverter
from .tool_facade import QnnToolFacade

__all__ = [
    "ExceptionHandler",
    "EXIT_SUCCESS",
    "EXIT_FAILURE",
    "EXIT_USAGE",
    "ParameterConverter",
    "QnnToolFacade"
]
