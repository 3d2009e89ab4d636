"""
随机纯态生成单元测试
"""
import numpy as np
import pytest

from qnnwitness.core.measures import concurrence
from qnnwitness.harness.random_states import (
    RandomMode, random_local_unitary, random_product_state, random_pure_state, random_pure_states
)


class TestRandomPureState:
    """随机纯态测试类"""

    def test_real_mode(self):
        """测试实系数态为实数且 a00 非负"""
        rng = np.random.default_rng(0)
        for state in random_pure_states(RandomMode.REAL, 50, rng):
            assert np.all(state.amplitudes.imag == 0.0)
            assert state.amplitudes[0].real >= 0.0

    def test_complex_mode_canonical(self):
        """测试复系数态去掉整体相位"""
        rng = np.random.default_rng(1)
        for state in random_pure_states("complex", 50, rng):
            assert state.amplitudes[0].imag == pytest.approx(0.0, abs=1e-15)
            assert state.amplitudes[0].real >= 0.0
            assert np.vdot(state.amplitudes, state.amplitudes).real == pytest.approx(1.0)

    def test_seed_reproducible(self):
        """测试相同种子产生相同序列"""
        first = random_pure_states(RandomMode.COMPLEX, 10, np.random.default_rng(5))
        second = random_pure_states(RandomMode.COMPLEX, 10, np.random.default_rng(5))
        for a, b in zip(first, second):
            assert np.array_equal(a.amplitudes, b.amplitudes)

    def test_complex_mean_weight(self):
        """测试复系数态 |a00|² 的均值约为 1/4"""
        states = random_pure_states(RandomMode.COMPLEX, 10000, np.random.default_rng(2013))
        weights = np.array([abs(state.amplitudes[0]) ** 2 for state in states])
        assert weights.mean() == pytest.approx(0.25, abs=0.01)

    def test_complex_states_have_phases(self):
        """测试复系数态带有非平凡相位"""
        state = random_pure_state(RandomMode.COMPLEX, np.random.default_rng(9))
        assert np.any(np.abs(state.amplitudes[1:].imag) > 0.0)

    def test_unknown_mode(self):
        """测试未知模式"""
        with pytest.raises(ValueError):
            random_pure_state("quaternion", np.random.default_rng(0))


class TestLocalStates:
    """乘积态与局域幺正测试类"""

    def test_product_state_unentangled(self):
        """测试乘积态共生度为零"""
        rng = np.random.default_rng(3)
        for _ in range(20):
            assert concurrence(random_product_state(rng)) == pytest.approx(0.0, abs=1e-7)

    def test_local_unitary(self):
        """测试局域幺正矩阵"""
        u = random_local_unitary(np.random.default_rng(4))
        assert u.shape == (4, 4)
        assert np.allclose(u @ u.conj().T, np.eye(4))
