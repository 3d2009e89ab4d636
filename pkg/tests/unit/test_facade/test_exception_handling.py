"""
异常处理单元测试
测试各类异常到错误码与退出码的转换
"""
import pytest
from unittest.mock import Mock, patch

from qnnwitness.facade.exception_handler import EXIT_FAILURE, EXIT_USAGE, ExceptionHandler
from qnnwitness.utils.exceptions import (
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


class TestExceptionHandler:
    """异常处理器测试类"""

    def setup_method(self):
        """测试方法执行前的设置"""
        self.handler = ExceptionHandler()

    def test_handle_invalid_state_error(self):
        """测试处理无效量子态"""
        result = self.handler.handle_exception(InvalidStateError("零向量"))

        assert result['success'] is False
        assert result['error_type'] == '无效量子态'
        assert result['error_code'] == 'INVALID_STATE_ERROR'
        assert result['exit_code'] == EXIT_USAGE
        assert '零向量' in result['error_message']

    def test_handle_invalid_input_error(self):
        """测试处理无效输入错误"""
        result = self.handler.handle_exception(InvalidInputError("参数无效"))

        assert result['error_type'] == '无效输入'
        assert result['error_code'] == 'INVALID_INPUT_ERROR'
        assert result['exit_code'] == EXIT_USAGE

    @pytest.mark.parametrize("error,code,exit_code", [
        (ScheduleError("x"), 'SCHEDULE_ERROR', EXIT_USAGE),
        (DataParsingError("x"), 'DATA_PARSING_ERROR', EXIT_USAGE),
        (ConfigurationError("x"), 'CONFIGURATION_ERROR', EXIT_USAGE),
        (UnknownExperimentError("x"), 'UNKNOWN_EXPERIMENT_ERROR', EXIT_USAGE),
        (ConvergenceError("x"), 'CONVERGENCE_ERROR', EXIT_FAILURE),
        (NumericalError("x"), 'NUMERICAL_ERROR', EXIT_FAILURE),
        (OutputWriteError("x", "/tmp/a.csv"), 'OUTPUT_WRITE_ERROR', EXIT_FAILURE),
        (QnnWitnessError("x"), 'QNNWITNESS_ERROR', EXIT_FAILURE),
    ])
    def test_error_codes(self, error, code, exit_code):
        """测试自定义异常的错误码与退出码"""
        result = self.handler.handle_exception(error)
        assert result['error_code'] == code
        assert result['exit_code'] == exit_code

    def test_handle_training_divergence_with_report(self):
        """测试训练发散时附带报告"""
        report = Mock()
        report.to_dict.return_value = {'stop_reason': 'diverged'}
        result = self.handler.handle_exception(TrainingDivergenceError("发散", report))

        assert result['error_code'] == 'TRAINING_DIVERGENCE_ERROR'
        assert result['exit_code'] == EXIT_FAILURE
        assert result['report'] == {'stop_reason': 'diverged'}
        report.to_dict.assert_called_once_with(include_schedule=False)

    def test_handle_training_divergence_without_report(self):
        """测试训练发散时没有报告"""
        result = self.handler.handle_exception(TrainingDivergenceError("发散"))
        assert 'report' not in result

    def test_handle_convergence_with_report(self):
        """测试严格模式未收敛时附带报告"""
        report = Mock()
        report.to_dict.return_value = {'stop_reason': 'max_epochs'}
        result = self.handler.handle_exception(ConvergenceError("未收敛", report))

        assert result['error_code'] == 'CONVERGENCE_ERROR'
        assert result['exit_code'] == EXIT_FAILURE
        assert result['report'] == {'stop_reason': 'max_epochs'}

    def test_handle_standard_exceptions(self):
        """测试处理标准异常"""
        # 测试ValueError
        result = self.handler.handle_exception(ValueError("值错误"))
        assert result['error_code'] == 'VALUE_ERROR'
        assert result['exit_code'] == EXIT_USAGE

        # 测试TypeError
        result = self.handler.handle_exception(TypeError("类型错误"))
        assert result['error_code'] == 'VALUE_ERROR'

        # 测试OSError
        result = self.handler.handle_exception(OSError("磁盘已满"))
        assert result['error_code'] == 'SYSTEM_ERROR'
        assert result['exit_code'] == EXIT_FAILURE

    def test_handle_unknown_exception(self):
        """测试处理未知异常"""
        result = self.handler.handle_exception(RuntimeError("未知"))
        assert result['error_type'] == '未知错误'
        assert result['error_code'] == 'UNKNOWN_ERROR'
        assert result['exit_code'] == EXIT_FAILURE

    def test_error_is_counted(self):
        """测试异常计入性能指标"""
        with patch('qnnwitness.facade.exception_handler.metrics_collector') as collector:
            self.handler.handle_exception(NumericalError("x"))
            collector.record_error.assert_called_once()

    def test_safe_execute_success(self):
        """测试安全执行成功"""
        result = self.handler.safe_execute(lambda x: x * 2, 5)
        assert result['success'] is True
        assert result['data'] == 10

    def test_safe_execute_passes_response_dict(self):
        """测试带 success 字段的结果原样返回"""
        response = {'success': False, 'exit_code': 1}
        assert self.handler.safe_execute(lambda: response) is response

    def test_safe_execute_exception(self):
        """测试安全执行时捕获异常"""
        def failing():
            raise ScheduleError("无法解析调度引用")

        result = self.handler.safe_execute(failing)
        assert result['success'] is False
        assert result['error_code'] == 'SCHEDULE_ERROR'
