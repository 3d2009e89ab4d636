"""
命令行工具单元测试
"""
import json
from pathlib import Path
from unittest.mock import patch

import pytest

from qnnwitness.network.presets import get_preset
from qnnwitness.network.trainer import TrainingConfig, train
from qnnwitness.network.training_sets import make_entanglement_training_set
from qnnwitness.tools.evaluation import EvaluationTool
from qnnwitness.tools.experiment import ExperimentTool
from qnnwitness.tools.schedule import ScheduleTool
from qnnwitness.tools.training import TrainingTool
from qnnwitness.utils.config import AppConfig
from qnnwitness.utils.exceptions import TrainingDivergenceError


class TestTools:
    """工具类测试"""

    def setup_method(self):
        self.config = AppConfig()
        self.config.integration.t_final = 1.0

    def test_integration_from_config(self):
        """测试积分配置取自应用配置"""
        tool = EvaluationTool(self.config)
        assert tool.integration.n_steps == 20

    def test_output_path(self, tmp_path):
        """测试输出路径默认取配置目录"""
        self.config.paths.output_dir = str(tmp_path)
        tool = ExperimentTool(self.config)
        assert tool.output_path("a.csv") == tmp_path / "a.csv"
        assert tool.output_path("a.csv", "other") == Path("other") / "a.csv"

    def test_unknown_training_target(self):
        """测试未知训练目标"""
        result = TrainingTool(self.config).train(target="witness")
        assert result['success'] is False
        assert result['error_code'] == 'INVALID_INPUT_ERROR'

    def test_divergence_writes_report(self, tmp_path):
        """测试训练发散时写出报告后返回错误"""
        self.config.paths.output_dir = str(tmp_path)
        self.config.training.max_epochs = 0
        tool = TrainingTool(self.config)

        report = train(make_entanglement_training_set(), get_preset("entanglement_init").schedule,
                       TrainingConfig(max_epochs=0), tool.integration)
        with patch('qnnwitness.tools.training.train') as mock_train:
            mock_train.side_effect = TrainingDivergenceError("发散", report)
            result = tool.train(target="entanglement")

        assert result['error_code'] == 'TRAINING_DIVERGENCE_ERROR'
        assert result['exit_code'] == 1
        assert 'report' in result
        assert (tmp_path / "entanglement_report.json").exists()

    def test_evaluate_bad_functional(self):
        """测试无法解析的输出泛函"""
        result = EvaluationTool(self.config).evaluate(state="1,0,0,0", functional="xx")
        assert result['error_code'] == 'DATA_PARSING_ERROR'

    def test_evaluate_product_state(self):
        """测试乘积态的参照判据为0"""
        result = EvaluationTool(self.config).evaluate(state="1,0,0,0", functional="proj:00")
        assert result['success'] is True
        assert result['e_f'] == pytest.approx(0.0, abs=1e-12)
        assert result['functional'] == "proj:0"

    def test_correct_bad_policy(self):
        """测试未知的符号策略"""
        result = EvaluationTool(self.config).correct(state="1,0,0,1", sign_policy="negative")
        assert result['success'] is False
        assert result['exit_code'] == 2

    def test_dump_preset_to_file(self, tmp_path):
        """测试导出预置调度到文件"""
        path = tmp_path / "preset.json"
        result = ScheduleTool(self.config).dump_preset(name="phase_trained", output=str(path))
        assert result['success'] is True
        document = json.loads(path.read_text(encoding='utf-8'))
        assert document['preset'] == "phase_trained"

    def test_fit_missing_file(self, tmp_path):
        """测试拟合不存在的调度文件"""
        result = ScheduleTool(self.config).fit(schedule_file=str(tmp_path / "missing.json"))
        assert result['success'] is False

    def test_list_experiments(self):
        """测试列出实验"""
        result = ExperimentTool(self.config).list_experiments()
        assert any(item['randomized'] for item in result['data'])
