"""
日志配置工具
设置项目日志记录格式和级别
"""
import structlog
import logging
import sys
from datetime import datetime
from pathlib import Path


def setup_logging(level: str = "INFO", format_type: str = "console", enable_file_logging: bool = False, log_dir: str = "logs/tool_log", disable_console: bool = False) -> None:
    """
    配置项目日志系统

    Args:
        level: 日志级别 (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        format_type: 日志格式类型 ("json", "console")
        enable_file_logging: 是否启用文件日志
        log_dir: 日志文件存储目录
        disable_console: 是否禁用控制台输出（控制台输出固定走 stderr，stdout 只留给 JSON/CSV）
    """
    numeric_level = getattr(logging, level.upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError(f'Invalid log level: {level}')

    handlers = []
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    if enable_file_logging:
        now = datetime.now()
        date_path = Path(log_dir) / now.strftime("%Y") / now.strftime("%m") / now.strftime("%d")
        log_file_path = date_path / f"qnnwitness_{now.strftime('%Y%m%d_%H%M%S')}.log"
        try:
            date_path.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_file_path, encoding='utf-8')
            file_handler.setFormatter(formatter)
            handlers.append(file_handler)
        except OSError as e:
            # 无法创建日志文件时继续运行，仅禁用文件日志
            print(f"无法创建日志文件 {log_file_path}: {e}", file=sys.stderr)

    if not disable_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        handlers.append(console_handler)

    if not handlers:
        handlers.append(logging.NullHandler())

    logging.basicConfig(
        level=numeric_level,
        handlers=handlers,
        force=True  # 强制重新配置
    )

    processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
    ]
    if format_type == "json":
        processors.append(structlog.processors.TimeStamper(fmt="iso", utc=True))
    processors.extend([
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.UnicodeDecoder(),
        structlog.processors.format_exc_info,
    ])
    if format_type == "json":
        processors.append(structlog.processors.JSONRenderer(ensure_ascii=False))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """
    获取结构化日志记录器

    Args:
        name: 日志记录器名称

    Returns:
        配置好的结构化日志记录器
    """
    return structlog.get_logger(name)
