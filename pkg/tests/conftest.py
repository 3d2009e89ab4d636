"""
pytest 配置文件
"""
import os
import sys
from pathlib import Path

import pytest

# 添加src目录到Python路径
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

# 设置日志相关环境变量
os.environ.setdefault('QNNWITNESS_LOG_LEVEL', 'WARNING')
os.environ.setdefault('QNNWITNESS_TOOL_LOG_ENABLED', 'false')

from qnnwitness.core.propagator import IntegrationConfig  # noqa: E402


@pytest.fixture
def short_cfg():
    """1 ns 的短演化，20 个 RK4 步"""
    return IntegrationConfig(dt=0.05, t_final=1.0)


@pytest.fixture
def output_dir(tmp_path):
    return tmp_path / "output"
