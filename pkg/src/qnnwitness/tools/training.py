"""
训练工具
从初始调度训练纠缠指示器或相位指示器，写出训练报告和采样调度
"""
from typing import Any, Dict, Optional

from .base import BaseTool
from ..harness.emitter import emit_json
from ..network.presets import resolve_schedule
from ..network.schedules import save_schedule
from ..network.trainer import TrainingConfig, TrainingReport, train
from ..network.training_sets import make_entanglement_training_set, make_phase_training_set
from ..utils.exceptions import ConvergenceError, InvalidInputError, TrainingDivergenceError

TRAINING_TARGETS = {
    'entanglement': "entanglement_init",
    'phase': "phase_init",
}


class TrainingTool(BaseTool):
    """指示器训练工具"""

    def _write(self, target: str, report: TrainingReport, output_dir: Optional[str]) -> Dict[str, str]:
        report_path = self.output_path(f"{target}_report.json", output_dir)
        schedule_path = self.output_path(f"{target}_schedule.json", output_dir)
        document = report.to_dict(include_schedule=False)
        document['target'] = target
        document['effective_config'] = self.config.to_dict()
        emit_json(document, report_path)
        save_schedule(report.schedule, schedule_path, extra={'target': target, 'rms': report.final_rms})
        return {'report': str(report_path), 'schedule': str(schedule_path)}

    def train(self, target: str, init: Optional[str] = None, phase_samples: int = 11,
              output_dir: Optional[str] = None) -> Dict[str, Any]:
        """
        训练指示器

        Args:
            target: entanglement 或 phase
            init: 初始调度（预置名称或调度文件），默认取对应的训练前常数调度
            phase_samples: 相位训练集的样本数
            output_dir: 输出目录

        Returns:
            训练结果字典；未达到 rms_stop 时 success 为 False，报告照常写出
        """
        try:
            if target not in TRAINING_TARGETS:
                raise InvalidInputError(f"未知的训练目标: {target}，可选 {sorted(TRAINING_TARGETS)}")
            samples = (make_entanglement_training_set() if target == 'entanglement'
                       else make_phase_training_set(phase_samples))
            init_schedule = resolve_schedule(init or TRAINING_TARGETS[target])
            tcfg = TrainingConfig.from_settings(self.config.training)

            self.logger.info(f"训练 {target} 指示器", init=init or TRAINING_TARGETS[target],
                             samples=len(samples), learning_rate=tcfg.learning_rate)
            try:
                report = train(samples, init_schedule, tcfg, self.integration)
            except (TrainingDivergenceError, ConvergenceError) as e:
                if e.report is not None:
                    self._write(target, e.report, output_dir)
                raise

            paths = self._write(target, report, output_dir)
            result = {
                'success': report.converged,
                'target': target,
                'converged': report.converged,
                'stop_reason': report.stop_reason,
                'epochs': report.epochs,
                'initial_rms': report.initial_rms,
                'final_rms': report.final_rms,
                'symmetry': report.symmetry,
                'learning_rate_final': report.learning_rate_final,
                'files': paths,
                'exit_code': 0 if report.converged else 1
            }
            if not report.converged:
                result.update({
                    'error_type': "训练未收敛",
                    'error_message': f"RMS {report.final_rms:.6g} 未达到 {tcfg.rms_stop:g}",
                    'error_code': "CONVERGENCE_ERROR"
                })
            return result

        except Exception as e:
            self.logger.error(f"训练失败: {e}")
            return self.handle_exception(e)
