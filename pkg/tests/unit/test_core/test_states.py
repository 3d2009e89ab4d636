"""
量子态单元测试
测试纯态与密度矩阵的构造和校验
"""
import math

import numpy as np
import pytest

from qnnwitness.core.states import DensityMatrix, PureState, as_density_matrix, basis_vector
from qnnwitness.utils.exceptions import InvalidStateError


class TestPureState:
    """纯态测试类"""

    def test_basis_vector(self):
        """测试电荷基矢"""
        state = PureState(basis_vector(3))
        assert state.amplitudes[3] == 1.0
        assert np.sum(np.abs(state.amplitudes)) == 1.0

    def test_basis_vector_out_of_range(self):
        """测试越界的基矢索引"""
        with pytest.raises(InvalidStateError):
            basis_vector(4)

    def test_rejects_unnormalized(self):
        """测试未归一化的振幅被拒绝"""
        with pytest.raises(InvalidStateError):
            PureState(np.array([1, 0, 0, 1], dtype=complex))

    def test_rejects_wrong_length(self):
        """测试振幅个数不是4"""
        with pytest.raises(InvalidStateError):
            PureState(np.array([1, 0, 0], dtype=complex))

    def test_rejects_non_finite(self):
        """测试非有限振幅"""
        with pytest.raises(InvalidStateError):
            PureState(np.array([np.nan, 0, 0, 0], dtype=complex))

    def test_from_amplitudes_normalize(self):
        """测试归一化构造"""
        state = PureState.from_amplitudes([1, 1, 1, 0], normalize=True)
        assert np.allclose(state.magnitudes, [1 / math.sqrt(3)] * 3 + [0])

    def test_from_amplitudes_zero_vector(self):
        """测试零向量无法归一化"""
        with pytest.raises(InvalidStateError):
            PureState.from_amplitudes([0, 0, 0, 0], normalize=True)

    def test_from_polar(self):
        """测试幅值加相位形式"""
        a = 1 / math.sqrt(2)
        state = PureState.from_polar(a, 0.0, 0.0, a, phi=math.pi / 2)
        assert abs(state.amplitudes[3] - 1j * a) < 1e-15
        assert state.amplitudes[0] == a

    def test_canonical_removes_global_phase(self):
        """测试规范化后 a00 为非负实数"""
        raw = np.exp(0.7j) * np.array([0.6, 0.0, 0.0, 0.8j])
        state = PureState(raw).canonical()
        assert state.amplitudes[0].imag == pytest.approx(0.0, abs=1e-15)
        assert state.amplitudes[0].real == pytest.approx(0.6)
        assert state.amplitudes[3] == pytest.approx(0.8j)

    def test_amplitudes_read_only(self):
        """测试振幅数组不可写"""
        state = PureState(basis_vector(0))
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0.0

    def test_density_matrix_is_pure(self):
        """测试纯态的密度矩阵纯度为1"""
        state = PureState.from_amplitudes([1, 1j, 0, 1], normalize=True)
        rho = state.density_matrix()
        assert rho.purity == pytest.approx(1.0)
        assert rho.is_valid()

    def test_to_list(self):
        """测试 JSON 列表形式"""
        state = PureState(np.array([0, 1j, 0, 0]))
        assert state.to_list() == [[0.0, 0.0], [0.0, 1.0], [0.0, 0.0], [0.0, 0.0]]


class TestDensityMatrix:
    """密度矩阵测试类"""

    def test_maximally_mixed_valid(self):
        """测试最大混合态合法"""
        rho = DensityMatrix.maximally_mixed()
        assert rho.validate() is rho
        assert rho.purity == pytest.approx(0.25)

    def test_shape_checked(self):
        """测试形状校验"""
        with pytest.raises(InvalidStateError):
            DensityMatrix(np.eye(2))

    def test_non_hermitian_rejected(self):
        """测试非厄米矩阵"""
        entries = np.eye(4, dtype=complex) / 4
        entries[0, 1] = 0.1
        with pytest.raises(InvalidStateError):
            DensityMatrix(entries).validate()

    def test_trace_checked(self):
        """测试迹不为1"""
        with pytest.raises(InvalidStateError):
            DensityMatrix(np.eye(4) / 2).validate()

    def test_negative_eigenvalue_rejected(self):
        """测试非半正定矩阵"""
        entries = np.diag([1.1, -0.1, 0.0, 0.0]).astype(complex)
        rho = DensityMatrix(entries)
        assert not rho.is_valid()

    def test_tolerance_accepts_roundoff(self):
        """测试容差范围内的数值误差"""
        entries = np.diag([1.0 + 1e-11, 0.0, 0.0, -1e-11]).astype(complex)
        assert DensityMatrix(entries).is_valid()

    def test_as_density_matrix(self):
        """测试统一转换"""
        state = PureState(basis_vector(1))
        assert as_density_matrix(state).entries[1, 1] == 1.0
        rho = DensityMatrix.maximally_mixed()
        assert as_density_matrix(rho) is rho
        assert as_density_matrix(np.eye(4) / 4).purity == pytest.approx(0.25)
