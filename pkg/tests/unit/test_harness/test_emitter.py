"""
实验结果输出单元测试
"""
import json
import math

import numpy as np
import pytest

from qnnwitness.harness.emitter import emit_csv, emit_json, format_value, render_csv, to_json_compatible
from qnnwitness.utils.exceptions import InvalidInputError, OutputWriteError


class TestFormatting:
    """格式化测试类"""

    def test_format_value(self):
        """测试浮点数最短往返表示"""
        assert format_value(0.1) == "0.1"
        assert format_value(np.float64(1 / 3)) == repr(1 / 3)
        assert format_value(np.int64(7)) == "7"
        assert format_value(True) == "true"
        assert format_value("phi_00_11") == "phi_00_11"

    def test_json_compatible(self):
        """测试 numpy 对象与非有限值"""
        document = to_json_compatible({
            'a': np.array([1.0, 2.0]),
            'b': np.float64(math.nan),
            'c': (np.int32(3), np.bool_(False)),
            'd': {1: math.inf},
        })
        assert document == {'a': [1.0, 2.0], 'b': None, 'c': [3, False], 'd': {'1': None}}


class TestEmitCsv:
    """CSV 输出测试类"""

    def setup_method(self):
        self.records = [
            {'theta': -math.pi, 'w': 0.0, 'family': "psi_minus"},
            {'theta': 0.5, 'w': -3.5, 'family': "psi_minus"},
        ]

    def test_render(self):
        """测试表头与行"""
        text = render_csv(self.records)
        lines = text.splitlines()
        assert lines[0] == "theta,w,family"
        assert lines[1] == f"{repr(-math.pi)},0.0,psi_minus"
        assert len(lines) == 3

    def test_byte_identical(self, tmp_path):
        """测试相同输入写出相同字节"""
        first = emit_csv(self.records, tmp_path / "a.csv").read_bytes()
        second = emit_csv(self.records, tmp_path / "b.csv").read_bytes()
        assert first == second

    def test_empty_records(self, tmp_path):
        """测试空记录不创建文件"""
        path = tmp_path / "empty.csv"
        with pytest.raises(InvalidInputError):
            emit_csv([], path)
        assert not path.exists()

    def test_inconsistent_columns(self):
        """测试字段不一致"""
        with pytest.raises(InvalidInputError):
            render_csv([{'a': 1}, {'b': 2}])

    def test_write_failure(self, tmp_path):
        """测试写入失败"""
        blocker = tmp_path / "file"
        blocker.write_text("x")
        with pytest.raises(OutputWriteError) as excinfo:
            emit_csv(self.records, blocker / "out.csv")
        assert excinfo.value.path == str(blocker / "out.csv")


class TestEmitJson:
    """JSON 输出测试类"""

    def test_nan_written_as_null(self, tmp_path):
        """测试非有限值写为 null"""
        path = emit_json({'rms': math.nan, 'values': np.arange(3)}, tmp_path / "nested" / "s.json")
        document = json.loads(path.read_text(encoding='utf-8'))
        assert document == {'rms': None, 'values': [0, 1, 2]}
