"""
输出泛函与指示器求值单元测试
"""
import math

import numpy as np
import pytest

from qnnwitness.core.hamiltonian import HamiltonianParams
from qnnwitness.core.states import PureState
from qnnwitness.network.indicators import (
    FunctionalKind, IndicatorEvaluator, OutputFunctional, as_evaluator, evaluate_indicator
)
from qnnwitness.network.schedules import ConstantSchedule, SampledSchedule
from qnnwitness.network.training_sets import phase_state
from qnnwitness.utils.exceptions import DataParsingError, InvalidInputError


class TestOutputFunctional:
    """输出泛函测试类"""

    @pytest.mark.parametrize("literal,kind,index", [
        ("zz2", FunctionalKind.ZZ_SQUARED, 3),
        ("proj:3", FunctionalKind.PROJECTION, 3),
        ("proj:01", FunctionalKind.PROJECTION, 1),
        (" PROJ:0 ", FunctionalKind.PROJECTION, 0),
    ])
    def test_from_literal(self, literal, kind, index):
        """测试字面量解析"""
        functional = OutputFunctional.from_literal(literal)
        assert functional.kind is kind
        if kind is FunctionalKind.PROJECTION:
            assert functional.basis_index == index

    @pytest.mark.parametrize("literal", ["zz", "proj:", "proj:7", "proj:ab"])
    def test_from_literal_invalid(self, literal):
        """测试无法解析的字面量"""
        with pytest.raises((DataParsingError, InvalidInputError)):
            OutputFunctional.from_literal(literal)

    def test_labels(self):
        """测试标签"""
        assert OutputFunctional.zz_squared().label == "zz2"
        assert OutputFunctional.projection(2).label == "proj:2"

    def test_apply_zz_squared(self):
        """测试 ⟨σzσz⟩² 输出"""
        rho = PureState.from_amplitudes([1, 1, 0, 0], normalize=True).density_matrix().entries
        assert OutputFunctional.zz_squared().apply(rho) == pytest.approx(0.0)
        bell = PureState.from_amplitudes([1, 0, 0, 1], normalize=True).density_matrix().entries
        assert OutputFunctional.zz_squared().apply(bell) == pytest.approx(1.0)

    def test_apply_many_matches_apply(self):
        """测试批量与单个一致"""
        rng = np.random.default_rng(3)
        rhos = []
        for _ in range(5):
            vector = rng.normal(size=4) + 1j * rng.normal(size=4)
            rhos.append(PureState.from_amplitudes(vector, normalize=True).density_matrix().entries)
        rhos = np.stack(rhos)
        for functional in (OutputFunctional.zz_squared(), OutputFunctional.projection(1)):
            batch = functional.apply_many(rhos)
            assert np.allclose(batch, [functional.apply(rho) for rho in rhos])

    def test_loss_costate_finite_difference(self):
        """测试损失对 ρ 的导数"""
        rng = np.random.default_rng(11)
        rho = PureState.from_amplitudes(rng.normal(size=4), normalize=True).density_matrix().entries
        direction = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        direction = direction + direction.conj().T
        h = 1e-6
        for functional in (OutputFunctional.zz_squared(), OutputFunctional.projection(3)):
            target = 0.3
            costate = functional.loss_costate(rho, target)
            analytic = float(np.real(np.trace(costate.conj().T @ direction)))

            def loss(x):
                return (target - functional.apply(x)) ** 2

            numeric = (loss(rho + h * direction) - loss(rho - h * direction)) / (2 * h)
            assert analytic == pytest.approx(numeric, rel=1e-6, abs=1e-9)


class TestIndicatorEvaluator:
    """指示器求值测试类"""

    def test_zero_hamiltonian_is_identity(self, short_cfg):
        """测试零哈密顿量下输出即初态的泛函值"""
        schedule = ConstantSchedule(HamiltonianParams())
        state = phase_state(math.pi / 3)
        value = evaluate_indicator(state, schedule, OutputFunctional.projection(3), short_cfg)
        assert value == pytest.approx(0.5)

    def test_diagonal_hamiltonian_keeps_zz(self, short_cfg):
        """测试只有 σz 项时 ⟨σzσz⟩ 守恒"""
        schedule = ConstantSchedule(HamiltonianParams(eps_A=0.7, eps_B=-0.2, zeta=1.1))
        state = PureState.from_amplitudes([0.6, 0, 0.8, 0])
        value = evaluate_indicator(state, schedule, OutputFunctional.zz_squared(), short_cfg)
        expected = (0.36 - 0.64) ** 2
        assert value == pytest.approx(expected, abs=1e-9)

    def test_evaluate_many(self, short_cfg):
        """测试批量求值与逐个一致"""
        evaluator = IndicatorEvaluator(ConstantSchedule(HamiltonianParams(0.3, 0.2, 0.1, -0.1, 0.4)), short_cfg)
        states = [phase_state(phi) for phi in (0.0, 1.0, 2.0)]
        functional = OutputFunctional.zz_squared()
        batch = evaluator.evaluate_many(states, functional)
        assert np.allclose(batch, [evaluator(state, functional) for state in states])
        assert evaluator.evaluate_many([], functional).shape == (0,)

    def test_as_evaluator_passthrough(self, short_cfg):
        """测试已有求值器原样返回"""
        evaluator = as_evaluator(ConstantSchedule(HamiltonianParams()), short_cfg)
        assert as_evaluator(evaluator) is evaluator


class TestPhaseSymmetry:
    """相位指示器对 φ 的对称性测试类"""

    def setup_method(self):
        self.phis = np.linspace(0.0, math.pi, 9)
        self.functional = OutputFunctional.projection(3)

    def test_even_without_z_terms(self, short_cfg):
        """测试只含 σx 项（K_A ≠ K_B 且随时间变化）时输出是 φ 的偶函数"""
        times = short_cfg.sample_times()
        values = np.zeros((short_cfg.n_samples, 5))
        values[:, 0] = 0.9 + 0.3 * np.cos(2.0 * times)
        values[:, 1] = 0.4 - 0.2 * np.sin(3.0 * times)
        evaluator = IndicatorEvaluator(SampledSchedule(short_cfg.dt, values), short_cfg)
        plus = evaluator.evaluate_many([phase_state(phi) for phi in self.phis], self.functional)
        minus = evaluator.evaluate_many([phase_state(-phi) for phi in self.phis], self.functional)
        assert np.max(np.abs(plus - minus)) <= 1e-12
        assert np.ptp(plus) > 1e-3

    def test_z_terms_break_evenness(self, short_cfg):
        """测试单比特 σz 项使输出不再是偶函数"""
        schedule = ConstantSchedule(HamiltonianParams(K_A=0.9, K_B=0.9, eps_A=0.6, eps_B=0.6))
        evaluator = IndicatorEvaluator(schedule, short_cfg)
        plus = evaluator.evaluate_many([phase_state(phi) for phi in self.phis], self.functional)
        minus = evaluator.evaluate_many([phase_state(-phi) for phi in self.phis], self.functional)
        assert np.max(np.abs(plus - minus)) > 1e-3
