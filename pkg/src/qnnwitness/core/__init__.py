"""
qnnwitness 量子核心模块初始化
"""
from .states import PureState, DensityMatrix, CHARGE_BASIS_LABELS
from .hamiltonian import HamiltonianParams, build_hamiltonian, PARAMETER_NAMES, GENERATORS
from .propagator import (
    IntegrationConfig,
    Propagator,
    rk4_step,
    propagate,
    expectation_zz,
    projection_probability
)
from .measures import (
    BellFamily,
    BellKind,
    WitnessTarget,
    bell_state,
    flat_state,
    concurrence,
    entanglement_of_formation,
    flat_state_concurrence,
    mintert_witness
)

__all__ = [
    "PureState",
    "DensityMatrix",
    "CHARGE_BASIS_LABELS",
    "HamiltonianParams",
    "build_hamiltonian",
    "PARAMETER_NAMES",
    "GENERATORS",
    "IntegrationConfig",
    "Propagator",
    "rk4_step",
    "propagate",
    "expectation_zz",
    "projection_probability",
    "BellFamily",
    "BellKind",
    "WitnessTarget",
    "bell_state",
    "flat_state",
    "concurrence",
    "entanglement_of_formation",
    "flat_state_concurrence",
    "mintert_witness"
]
