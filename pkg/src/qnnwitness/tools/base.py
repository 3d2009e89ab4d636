"""
基础工具类定义
包含所有命令行工具的基类和通用功能
"""
from pathlib import Path
from typing import Any, Dict, Optional

from ..core.propagator import IntegrationConfig
from ..utils.config import AppConfig
from ..utils.logger import get_logger


class BaseTool:
    """命令行工具基类"""

    def __init__(self, config: AppConfig):
        self.config = config
        self.logger = get_logger(self.__class__.__name__.lower())

        # 延迟导入以避免循环导入
        from ..facade.parameter_converter import ParameterConverter
        from ..facade.exception_handler import ExceptionHandler
        self.converter = ParameterConverter()
        self.exception_handler = ExceptionHandler()

    @property
    def integration(self) -> IntegrationConfig:
        return IntegrationConfig.from_settings(self.config.integration)

    def output_path(self, name: str, output_dir: Optional[str] = None) -> Path:
        """输出文件路径，目录默认取配置中的 output_dir"""
        return Path(output_dir or self.config.paths.output_dir) / name

    def handle_exception(self, e: Exception) -> Dict[str, Any]:
        """统一异常处理"""
        return self.exception_handler.handle_exception(e)
