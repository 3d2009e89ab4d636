"""
异常处理器
负责捕获计算层异常并转换为命令行的标准响应与退出码
"""
import time
import traceback
from typing import Any, Callable, Dict

from ..utils.logger import get_logger
from ..utils.exceptions import (
    ConfigurationError,
    ConvergenceError,
    DataParsingError,
    InvalidInputError,
    InvalidStateError,
    NumericalError,
    OutputWriteError,
    QnnWitnessError,
    ScheduleError,
    TrainingDivergenceError,
    UnknownExperimentError
)
from ..utils.metrics import metrics_collector

EXIT_SUCCESS = 0
EXIT_FAILURE = 1  # 数值或收敛失败
EXIT_USAGE = 2  # 用法错误


class ExceptionHandler:
    """异常处理器，把异常转换为带错误码和退出码的响应字典"""

    def __init__(self):
        """初始化异常处理器"""
        self.logger = get_logger("exception_handler")

    def handle_exception(self, exception: Exception) -> Dict[str, Any]:
        """
        处理异常并返回标准格式的错误响应

        Args:
            exception: 捕获的异常对象

        Returns:
            标准格式的错误响应字典
        """
        metrics_collector.record_error()
        self.logger.error(f"异常处理: {type(exception).__name__}: {str(exception)}")

        if isinstance(exception, InvalidStateError):
            return self._create_error_response(
                "无效量子态", str(exception),
                error_code="INVALID_STATE_ERROR", exit_code=EXIT_USAGE
            )

        elif isinstance(exception, InvalidInputError):
            return self._create_error_response(
                "无效输入", str(exception),
                error_code="INVALID_INPUT_ERROR", exit_code=EXIT_USAGE
            )

        elif isinstance(exception, ScheduleError):
            return self._create_error_response(
                "调度错误", str(exception),
                error_code="SCHEDULE_ERROR", exit_code=EXIT_USAGE
            )

        elif isinstance(exception, DataParsingError):
            return self._create_error_response(
                "数据解析错误", str(exception),
                error_code="DATA_PARSING_ERROR", exit_code=EXIT_USAGE
            )

        elif isinstance(exception, ConfigurationError):
            return self._create_error_response(
                "配置错误", str(exception),
                error_code="CONFIGURATION_ERROR", exit_code=EXIT_USAGE
            )

        elif isinstance(exception, UnknownExperimentError):
            return self._create_error_response(
                "未知实验", str(exception),
                error_code="UNKNOWN_EXPERIMENT_ERROR", exit_code=EXIT_USAGE
            )

        elif isinstance(exception, TrainingDivergenceError):
            response = self._create_error_response(
                "训练发散", str(exception),
                error_code="TRAINING_DIVERGENCE_ERROR", exit_code=EXIT_FAILURE
            )
            if exception.report is not None:
                response['report'] = exception.report.to_dict(include_schedule=False)
            return response

        elif isinstance(exception, ConvergenceError):
            response = self._create_error_response(
                "训练未收敛", str(exception),
                error_code="CONVERGENCE_ERROR", exit_code=EXIT_FAILURE
            )
            if exception.report is not None:
                response['report'] = exception.report.to_dict(include_schedule=False)
            return response

        elif isinstance(exception, NumericalError):
            return self._create_error_response(
                "数值错误", str(exception),
                error_code="NUMERICAL_ERROR", exit_code=EXIT_FAILURE
            )

        elif isinstance(exception, OutputWriteError):
            return self._create_error_response(
                "输出写入错误", str(exception),
                error_code="OUTPUT_WRITE_ERROR", exit_code=EXIT_FAILURE
            )

        elif isinstance(exception, QnnWitnessError):
            return self._create_error_response(
                "计算错误", str(exception),
                error_code="QNNWITNESS_ERROR", exit_code=EXIT_FAILURE
            )

        elif isinstance(exception, (ValueError, TypeError)):
            return self._create_error_response(
                "值错误", f"无效的值: {str(exception)}",
                error_code="VALUE_ERROR", exit_code=EXIT_USAGE
            )

        elif isinstance(exception, OSError):
            return self._create_error_response(
                "系统错误", f"系统级错误: {str(exception)}",
                error_code="SYSTEM_ERROR", exit_code=EXIT_FAILURE
            )

        else:
            self.logger.debug("未分类异常的堆栈", traceback=traceback.format_exc())
            return self._create_error_response(
                "未知错误", f"发生未知错误: {str(exception)}",
                error_code="UNKNOWN_ERROR", exit_code=EXIT_FAILURE
            )

    def _create_error_response(self, error_type: str, error_message: str,
                               error_code: str = "UNKNOWN_ERROR",
                               exit_code: int = EXIT_FAILURE) -> Dict[str, Any]:
        """
        创建标准格式的错误响应

        Args:
            error_type: 错误类型描述
            error_message: 错误消息
            error_code: 错误代码
            exit_code: 进程退出码

        Returns:
            标准格式的错误响应字典
        """
        return {
            'success': False,
            'error_type': error_type,
            'error_message': error_message,
            'error_code': error_code,
            'exit_code': exit_code,
            'timestamp': time.time()
        }

    def safe_execute(self, func: Callable[..., Any], *args, **kwargs) -> Dict[str, Any]:
        """
        安全执行函数，捕获异常并返回标准格式响应

        Args:
            func: 要执行的函数
            *args: 函数位置参数
            **kwargs: 函数关键字参数

        Returns:
            函数执行结果或错误响应字典
        """
        try:
            result = func(*args, **kwargs)

            if isinstance(result, dict) and 'success' in result:
                return result
            return {
                'success': True,
                'data': result,
                'timestamp': time.time()
            }

        except Exception as e:
            return self.handle_exception(e)
