"""
配置管理工具
管理项目配置参数和默认值
"""
import os
import json
from typing import Any, Dict, Optional
from dataclasses import dataclass, asdict, fields
from .exceptions import ConfigurationError


@dataclass
class IntegrationSettings:
    """积分配置数据类"""
    dt: float = 0.05  # 积分步长（ns）
    t_final: float = 190.0  # 演化时间（ns）


@dataclass
class TrainingSettings:
    """训练配置数据类"""
    learning_rate: float = 0.5
    max_epochs: int = 5000
    rms_stop: float = 1e-4
    mode: str = "online"  # online, batch
    gradient: str = "adjoint"  # adjoint, finite_difference
    workers: int = 1  # 批量模式下并行计算梯度的线程数
    strict: bool = False  # 未达到 rms_stop 时按错误处理


@dataclass
class SweepSettings:
    """实验扫描配置数据类"""
    grid_points: int = 73  # 每个角度轴的点数（5° 步长）
    magnitude_points: int = 21  # 每个幅值轴的点数
    n_states: int = 1000  # 随机态数量（桌面规模）
    seed: int = 20130501
    workers: int = 1


@dataclass
class PathSettings:
    """路径配置数据类"""
    output_dir: str = "output"
    entanglement_schedule: str = "entanglement_trained"  # 预设名称或调度文件路径
    phase_schedule: str = "phase_trained"


@dataclass
class LoggingConfig:
    """日志配置数据类"""
    level: str = "INFO"  # 日志级别
    format: str = "console"  # console, json
    tool_log_enabled: bool = False  # 启用工具运行日志文件
    tool_log_path: str = "logs/tool_log"  # 工具日志存储路径


@dataclass
class AppConfig:
    """应用配置数据类"""
    integration: IntegrationSettings = None
    training: TrainingSettings = None
    sweep: SweepSettings = None
    paths: PathSettings = None
    logging: LoggingConfig = None

    def __post_init__(self):
        if self.integration is None:
            self.integration = IntegrationSettings()
        if self.training is None:
            self.training = TrainingSettings()
        if self.sweep is None:
            self.sweep = SweepSettings()
        if self.paths is None:
            self.paths = PathSettings()
        if self.logging is None:
            self.logging = LoggingConfig()

    def to_dict(self) -> Dict[str, Any]:
        """转换为可序列化的字典"""
        return {
            'integration': asdict(self.integration),
            'training': asdict(self.training),
            'sweep': asdict(self.sweep),
            'paths': asdict(self.paths),
            'logging': asdict(self.logging)
        }


_SECTIONS = {
    'integration': IntegrationSettings,
    'training': TrainingSettings,
    'sweep': SweepSettings,
    'paths': PathSettings,
    'logging': LoggingConfig,
}


def _coerce(section: str, name: str, value: Any, default: Any) -> Any:
    """按默认值的类型转换配置项"""
    try:
        if isinstance(default, bool):
            if isinstance(value, str):
                return value.strip().lower() in ('1', 'true', 'yes', 'on')
            return bool(value)
        if isinstance(default, int):
            return int(value)
        if isinstance(default, float):
            return float(value)
        return str(value)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"配置项 {section}.{name} 的值无效: {value!r} ({e})")


class ConfigManager:
    """配置管理器"""

    def __init__(self, config_file: Optional[str] = None):
        """
        初始化配置管理器

        Args:
            config_file: 配置文件路径
        """
        self.config_file = config_file
        self.config = AppConfig()

        if config_file:
            self.load_from_file(config_file)
        self.load_from_environment()

    def load_from_file(self, file_path: str) -> None:
        """
        从文件加载配置

        Args:
            file_path: 配置文件路径
        """
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"从文件加载配置时出错 {file_path}: {e}")

        if not isinstance(data, dict):
            raise ConfigurationError(f"配置文件顶层必须是对象: {file_path}")

        for section, values in data.items():
            if section not in _SECTIONS:
                raise ConfigurationError(f"未知的配置段: {section}")
            if not isinstance(values, dict):
                raise ConfigurationError(f"配置段 {section} 必须是对象")
            self.apply_overrides(section, values)

    def load_from_environment(self) -> None:
        """从环境变量加载配置"""
        output_dir_env = os.getenv('QNNWITNESS_OUTPUT_DIR')
        if output_dir_env:
            self.config.paths.output_dir = output_dir_env

        self.config.logging.level = os.getenv('QNNWITNESS_LOG_LEVEL', self.config.logging.level)

        seed_env = os.getenv('QNNWITNESS_SEED')
        if seed_env:
            self.config.sweep.seed = _coerce('sweep', 'seed', seed_env, 0)

        tool_log_env = os.getenv('QNNWITNESS_TOOL_LOG_ENABLED')
        if tool_log_env:
            self.config.logging.tool_log_enabled = _coerce('logging', 'tool_log_enabled', tool_log_env, True)
        self.config.logging.tool_log_path = os.getenv('QNNWITNESS_TOOL_LOG_PATH', self.config.logging.tool_log_path)

    def apply_overrides(self, section: str, values: Dict[str, Any]) -> None:
        """
        覆盖某个配置段中的配置项（命令行参数或配置文件）

        Args:
            section: 配置段名称
            values: 配置项字典，值为 None 的项被忽略
        """
        target = getattr(self.config, section, None)
        if target is None or section not in _SECTIONS:
            raise ConfigurationError(f"未知的配置段: {section}")
        known = {f.name for f in fields(target)}
        for name, value in values.items():
            if value is None:
                continue
            if name not in known:
                raise ConfigurationError(f"未知的配置项: {section}.{name}")
            setattr(target, name, _coerce(section, name, value, getattr(target, name)))

    def save_to_file(self, file_path: str) -> None:
        """
        保存配置到文件

        Args:
            file_path: 配置文件路径
        """
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(self.config.to_dict(), f, indent=2, ensure_ascii=False)

    def get_config(self) -> AppConfig:
        """
        获取当前配置

        Returns:
            当前配置对象
        """
        return self.config


# 全局配置管理器实例
config_manager = ConfigManager()
