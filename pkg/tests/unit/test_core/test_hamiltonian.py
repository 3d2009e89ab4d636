"""
哈密顿量单元测试
"""
import numpy as np
import pytest

from qnnwitness.core.hamiltonian import (
    PARAMETER_NAMES, SIGMA_X, SIGMA_Z, HamiltonianParams, build_hamiltonian, hamiltonians
)
from qnnwitness.utils.exceptions import InvalidInputError


class TestHamiltonianParams:
    """参数对象测试类"""

    def test_defaults_zero(self):
        """测试默认参数全为零"""
        assert np.all(HamiltonianParams().as_array() == 0.0)

    def test_from_array_order(self):
        """测试数组顺序为 K_A, K_B, eps_A, eps_B, zeta"""
        params = HamiltonianParams.from_array([1, 2, 3, 4, 5])
        assert params.to_dict() == dict(zip(PARAMETER_NAMES, [1.0, 2.0, 3.0, 4.0, 5.0]))

    def test_from_array_wrong_size(self):
        """测试参数个数错误"""
        with pytest.raises(InvalidInputError):
            HamiltonianParams.from_array([1, 2, 3])

    def test_from_dict_unknown_key(self):
        """测试未知参数名"""
        with pytest.raises(InvalidInputError):
            HamiltonianParams.from_dict({'K_C': 1.0})

    def test_from_dict_partial(self):
        """测试缺省参数补零"""
        params = HamiltonianParams.from_dict({'zeta': 0.5})
        assert params.zeta == 0.5
        assert params.K_A == 0.0

    def test_non_finite_rejected(self):
        """测试非有限值"""
        with pytest.raises(InvalidInputError):
            HamiltonianParams(K_A=float('inf'))


class TestBuildHamiltonian:
    """哈密顿量组装测试类"""

    def test_tunneling_term(self):
        """测试隧穿项作用在第一个比特上"""
        h = build_hamiltonian(HamiltonianParams(K_A=1.0))
        assert np.allclose(h, np.kron(SIGMA_X, np.eye(2)))

    def test_diagonal_terms(self):
        """测试偏置与耦合项的对角元"""
        h = build_hamiltonian(HamiltonianParams(eps_A=1.0, eps_B=2.0, zeta=3.0))
        # |00>: 1+2+3, |01>: 1−2−3, |10>: −1+2−3, |11>: −1−2+3
        assert np.allclose(np.diag(h).real, [6.0, -4.0, -2.0, 0.0])

    def test_hermitian_traceless(self):
        """测试厄米且无迹"""
        h = build_hamiltonian(HamiltonianParams(0.3, -0.7, 1.1, 0.2, -0.4))
        assert np.allclose(h, h.conj().T)
        assert abs(np.trace(h)) < 1e-14

    def test_batch_matches_single(self):
        """测试批量组装与单个组装一致"""
        samples = np.array([[0.1, 0.2, 0.3, 0.4, 0.5], [1.0, 0.0, -1.0, 0.0, 2.0]])
        batch = hamiltonians(samples)
        assert batch.shape == (2, 4, 4)
        for row, h in zip(samples, batch):
            assert np.allclose(h, build_hamiltonian(HamiltonianParams.from_array(row)))

    def test_batch_shape_checked(self):
        """测试采样最后一维必须为5"""
        with pytest.raises(InvalidInputError):
            hamiltonians(np.zeros((3, 4)))

    def test_batch_non_finite(self):
        """测试采样含 NaN"""
        samples = np.zeros((2, 5))
        samples[1, 2] = np.nan
        with pytest.raises(InvalidInputError):
            hamiltonians(samples)

    def test_zz_coupling_sign(self):
        """测试 ζ 项为 σz⊗σz"""
        h = build_hamiltonian(HamiltonianParams(zeta=1.0))
        assert np.allclose(h, np.kron(SIGMA_Z, SIGMA_Z))
