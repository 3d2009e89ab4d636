"""
qnnwitness 实验扫描模块初始化
"""
from .random_states import (
    RandomMode,
    random_pure_state,
    random_pure_states,
    random_product_state,
    random_local_unitary
)
from .emitter import emit_csv, emit_json, render_csv
from .sweeps import (
    EXPERIMENTS,
    GridAxis,
    SweepSpec,
    SweepRecord,
    SweepResult,
    list_experiments,
    run_sweep
)

__all__ = [
    "RandomMode",
    "random_pure_state",
    "random_pure_states",
    "random_product_state",
    "random_local_unitary",
    "emit_csv",
    "emit_json",
    "render_csv",
    "EXPERIMENTS",
    "GridAxis",
    "SweepSpec",
    "SweepRecord",
    "SweepResult",
    "list_experiments",
    "run_sweep"
]
