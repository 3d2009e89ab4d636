"""
网络训练单元测试
测试学习率回退、停止条件、发散检测和训练报告
"""
from unittest.mock import patch

import numpy as np
import pytest

from qnnwitness.core.hamiltonian import HamiltonianParams
from qnnwitness.core.states import PureState
from qnnwitness.network.gradient import GradientResult
from qnnwitness.network.indicators import OutputFunctional
from qnnwitness.network.schedules import ConstantSchedule, SampledSchedule
from qnnwitness.network.trainer import QnnTrainer, TrainingConfig, TrainingReport, rms, train
from qnnwitness.network.training_sets import TrainingSample, make_entanglement_training_set
from qnnwitness.utils.exceptions import ConvergenceError, InvalidInputError, TrainingDivergenceError


def bell_sample(target=1.0):
    bell = PureState.from_amplitudes([1, 0, 0, 1], normalize=True)
    return TrainingSample(bell, OutputFunctional.zz_squared(), target, "bell")


class TestTrainingConfig:
    """训练配置测试类"""

    def test_defaults(self):
        """测试默认值"""
        tcfg = TrainingConfig()
        assert tcfg.learning_rate == 0.5
        assert tcfg.mode == "online"
        assert tcfg.gradient == "adjoint"

    @pytest.mark.parametrize("kwargs", [
        {'learning_rate': 0.0}, {'max_epochs': -1}, {'rms_stop': 0.0},
        {'mode': 'stochastic'}, {'gradient': 'spsa'}, {'workers': 0}
    ])
    def test_invalid(self, kwargs):
        """测试非法配置"""
        with pytest.raises(InvalidInputError):
            TrainingConfig(**kwargs)


class TestRms:
    """RMS 测试类"""

    def test_rms(self):
        """测试均方根误差"""
        assert rms([0.0, 1.0], [1.0, 1.0]) == pytest.approx(np.sqrt(0.5))
        assert rms([0.5], [0.5]) == 0.0


class TestQnnTrainer:
    """训练器测试类"""

    def setup_method(self):
        self.samples = [bell_sample(0.5)]
        self.init = ConstantSchedule(HamiltonianParams())

    def test_backoff_and_revert(self, short_cfg):
        """测试 RMS 上升时学习率减半并从最佳调度继续"""
        trainer = QnnTrainer(TrainingConfig(learning_rate=0.4, max_epochs=10, rms_stop=0.1), short_cfg)
        inputs = []

        def fake_epoch(samples, values, lr):
            inputs.append((np.array(values), lr))
            return values + 1.0

        rms_values = iter([0.5, 0.4, 0.45, 0.05])
        with patch.object(trainer, "_online_epoch", side_effect=fake_epoch), \
                patch.object(trainer, "evaluate", side_effect=lambda s, v: (next(rms_values), [0.5])):
            report = trainer.train(self.samples, self.init)

        assert report.rms_history == [0.5, 0.4, 0.45, 0.05]
        assert report.backoffs == 1
        assert report.stop_reason == "rms_stop"
        assert report.converged
        assert report.epochs == 3
        assert report.learning_rate_final == pytest.approx(0.2)
        # 第3轮从第1轮的结果出发
        assert np.array_equal(inputs[2][0], inputs[1][0])
        assert inputs[2][1] == pytest.approx(0.2)
        assert np.all(report.schedule.values == 2.0)

    def test_learning_rate_floor(self, short_cfg):
        """测试学习率降到下限后停止"""
        trainer = QnnTrainer(TrainingConfig(max_epochs=1000), short_cfg)
        values = iter([0.5] + [0.6] * 1000)
        with patch.object(trainer, "_online_epoch", side_effect=lambda s, v, lr: v), \
                patch.object(trainer, "evaluate", side_effect=lambda s, v: (next(values), [0.5])):
            report = trainer.train(self.samples, self.init)
        assert report.stop_reason == "learning_rate_floor"
        assert report.epochs == 40
        assert report.backoffs == 40
        assert not report.converged

    def test_max_epochs(self, short_cfg):
        """测试达到最大轮数"""
        trainer = QnnTrainer(TrainingConfig(max_epochs=3, rms_stop=1e-9), short_cfg)
        values = iter([0.5, 0.4, 0.3, 0.2])
        with patch.object(trainer, "_online_epoch", side_effect=lambda s, v, lr: v), \
                patch.object(trainer, "evaluate", side_effect=lambda s, v: (next(values), [0.5])):
            report = trainer.train(self.samples, self.init)
        assert report.stop_reason == "max_epochs"
        assert report.epochs == 3
        assert len(report.rms_history) == 4

    def test_strict_max_epochs(self, short_cfg):
        """测试严格模式下用尽轮数时抛出收敛错误并携带报告"""
        trainer = QnnTrainer(TrainingConfig(max_epochs=3, rms_stop=1e-9, strict=True), short_cfg)
        values = iter([0.5, 0.4, 0.3, 0.2])
        with patch.object(trainer, "_online_epoch", side_effect=lambda s, v, lr: v), \
                patch.object(trainer, "evaluate", side_effect=lambda s, v: (next(values), [0.5])), \
                pytest.raises(ConvergenceError) as excinfo:
            trainer.train(self.samples, self.init)
        report = excinfo.value.report
        assert report.stop_reason == "max_epochs"
        assert report.epochs == 3
        assert not report.converged

    def test_strict_converged(self, short_cfg):
        """测试严格模式下收敛时正常返回"""
        report = train([bell_sample(1.0)], self.init, TrainingConfig(rms_stop=1e-6, strict=True), short_cfg)
        assert report.converged

    def test_already_converged(self, short_cfg):
        """测试初始调度已满足停止阈值"""
        report = train([bell_sample(1.0)], self.init, TrainingConfig(rms_stop=1e-6), short_cfg)
        assert report.stop_reason == "rms_stop"
        assert report.epochs == 0
        assert report.converged

    def test_divergence(self, short_cfg):
        """测试 RMS 超过初始值10倍时报告发散"""
        trainer = QnnTrainer(TrainingConfig(learning_rate=0.5, max_epochs=5, rms_stop=1e-6), short_cfg)
        huge = GradientResult(output=1.0, loss=0.0, gradient=np.full((short_cfg.n_samples, 5), 1e3))
        trainer._gradient = lambda *args, **kwargs: huge
        with pytest.raises(TrainingDivergenceError) as excinfo:
            trainer.train([bell_sample(0.99)], self.init)
        report = excinfo.value.report
        assert report.stop_reason == "diverged"
        assert report.epochs == 1
        assert report.initial_rms == pytest.approx(0.01)

    def test_empty_samples(self, short_cfg):
        """测试空训练集"""
        with pytest.raises(InvalidInputError):
            QnnTrainer(cfg=short_cfg).train([], self.init)

    @pytest.mark.parametrize("mode,workers", [("online", 1), ("batch", 1), ("batch", 2)])
    def test_real_training_never_worse(self, short_cfg, mode, workers):
        """测试真实梯度训练后 RMS 不高于初始值"""
        init = ConstantSchedule(HamiltonianParams(0.5, 0.5, 0.3, 0.3, 0.2))
        tcfg = TrainingConfig(learning_rate=0.05, max_epochs=3, rms_stop=1e-6, mode=mode, workers=workers)
        report = train(make_entanglement_training_set(), init, tcfg, short_cfg)
        assert report.final_rms <= report.initial_rms + 1e-12
        assert isinstance(report.schedule, SampledSchedule)
        assert report.schedule.values.shape == (short_cfg.n_samples, 5)
        assert len(report.outputs) == 4

    def test_batch_workers_deterministic(self, short_cfg):
        """测试批量模式多线程结果与单线程一致"""
        init = ConstantSchedule(HamiltonianParams(0.5, 0.5, 0.3, 0.3, 0.2))
        reports = [
            train(make_entanglement_training_set(), init,
                  TrainingConfig(learning_rate=0.05, max_epochs=2, mode="batch", workers=workers), short_cfg)
            for workers in (1, 3)
        ]
        assert reports[0].rms_history == reports[1].rms_history
        assert np.array_equal(reports[0].schedule.values, reports[1].schedule.values)

    def test_online_reproducible(self, short_cfg):
        """测试在线模式重复训练逐位一致"""
        init = ConstantSchedule(HamiltonianParams(0.5, 0.5, 0.3, 0.3, 0.2))
        tcfg = TrainingConfig(learning_rate=0.05, max_epochs=3, rms_stop=1e-9)
        first = train(make_entanglement_training_set(), init, tcfg, short_cfg)
        second = train(make_entanglement_training_set(), init, tcfg, short_cfg)
        assert first.rms_history == second.rms_history
        assert first.outputs == second.outputs
        assert np.array_equal(first.schedule.values, second.schedule.values)

    def test_report_document(self, short_cfg):
        """测试报告文档"""
        report = train([bell_sample(1.0)], self.init, TrainingConfig(rms_stop=1e-6), short_cfg)
        document = report.to_dict(include_schedule=False)
        assert 'schedule' not in document
        assert document['samples'][0]['label'] == "bell"
        assert document['config']['integration']['n_steps'] == short_cfg.n_steps
        assert 'schedule' in report.to_dict()


class TestTrainingReport:
    """训练报告测试类"""

    def make_report(self, values):
        return TrainingReport(
            rms_history=[0.1], schedule=SampledSchedule(0.05, values), outputs=[0.9], targets=[1.0],
            labels=["bell"], epochs=0, converged=False, stop_reason="max_epochs",
            learning_rate_initial=0.5, learning_rate_final=0.5
        )

    def test_symmetry(self):
        """测试两比特参数函数差的相对大小"""
        values = np.zeros((5, 5))
        values[:, 0] = 1.0
        values[:, 1] = 0.98
        values[2, 2] = -0.5
        values[2, 3] = -0.5
        values[:, 4] = 3.0
        symmetry = self.make_report(values).symmetry
        assert symmetry['K'] == pytest.approx(0.02)
        assert symmetry['eps'] == 0.0
        assert self.make_report(values).to_dict(include_schedule=False)['symmetry'] == symmetry

    def test_symmetry_zero_functions(self):
        """测试参数函数全为0时比值为0"""
        assert self.make_report(np.zeros((3, 5))).symmetry == {'K': 0.0, 'eps': 0.0}
