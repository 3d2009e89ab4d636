"""
qnnwitness 网络模块初始化
"""
from .schedules import (
    ParameterSchedule,
    ConstantSchedule,
    FourierSeries,
    FourierSchedule,
    SampledSchedule,
    evaluate,
    to_sampled,
    load_schedule,
    save_schedule
)
from .presets import PRESETS, SchedulePreset, get_preset, resolve_schedule
from .fourier_fit import FourierFit, ScheduleFit, fit_fourier, fit_series
from .indicators import OutputFunctional, FunctionalKind, IndicatorEvaluator, evaluate_indicator
from .training_sets import (
    TrainingSample,
    make_entanglement_training_set,
    make_phase_training_set,
    extended_phase_target
)
from .gradient import GradientResult, loss_gradient, finite_difference_gradient
from .trainer import TrainingConfig, TrainingReport, QnnTrainer, train
from .correction import (
    PhaseEstimate,
    CorrectionResult,
    SignPolicy,
    OscillationModel,
    estimate_phase,
    phase_rotation,
    corrected_entanglement,
    oscillation_model
)

__all__ = [
    "ParameterSchedule",
    "ConstantSchedule",
    "FourierSeries",
    "FourierSchedule",
    "SampledSchedule",
    "evaluate",
    "to_sampled",
    "load_schedule",
    "save_schedule",
    "PRESETS",
    "SchedulePreset",
    "get_preset",
    "resolve_schedule",
    "FourierFit",
    "ScheduleFit",
    "fit_fourier",
    "fit_series",
    "OutputFunctional",
    "FunctionalKind",
    "IndicatorEvaluator",
    "evaluate_indicator",
    "TrainingSample",
    "make_entanglement_training_set",
    "make_phase_training_set",
    "extended_phase_target",
    "GradientResult",
    "loss_gradient",
    "finite_difference_gradient",
    "TrainingConfig",
    "TrainingReport",
    "QnnTrainer",
    "train",
    "PhaseEstimate",
    "CorrectionResult",
    "SignPolicy",
    "OscillationModel",
    "estimate_phase",
    "phase_rotation",
    "corrected_entanglement",
    "oscillation_model"
]
