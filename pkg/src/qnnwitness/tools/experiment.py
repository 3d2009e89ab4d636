"""
实验工具
运行注册的扫描实验，写出 CSV 记录和 JSON 摘要
"""
from typing import Any, Dict, List, Optional

from .base import BaseTool
from ..harness.emitter import emit_csv, emit_json
from ..harness.sweeps import SweepSpec, list_experiments, run_sweep


class ExperimentTool(BaseTool):
    """实验扫描工具"""

    def list_experiments(self) -> Dict[str, Any]:
        try:
            return {'success': True, 'data': list_experiments()}
        except Exception as e:
            return self.handle_exception(e)

    def sweep(self, experiment: str, seed: Optional[int] = None, n_states: Optional[int] = None,
              grid: Optional[List[str]] = None, sign_policy: str = "probe",
              entanglement_schedule: Optional[str] = None, phase_schedule: Optional[str] = None,
              output_dir: Optional[str] = None) -> Dict[str, Any]:
        """
        运行扫描

        Args:
            experiment: 实验名称
            seed: 随机种子，默认取配置
            n_states: 随机态数量，默认取配置
            grid: 覆盖默认扫描轴，每项形如 "theta=-pi:pi:37"
            sign_policy: 相位校正的符号策略
            entanglement_schedule: 纠缠指示器调度，默认取配置
            phase_schedule: 相位指示器调度，默认取配置
            output_dir: 输出目录

        Returns:
            结果字典；检查项未全部通过时 success 为 False
        """
        try:
            sweep_settings = self.config.sweep
            axes = dict(self.converter.parse_grid_axis(item) for item in (grid or []))
            spec = SweepSpec(
                experiment=experiment,
                grid=axes,
                seed=sweep_settings.seed if seed is None else seed,
                n_states=n_states or sweep_settings.n_states,
                entanglement_schedule=entanglement_schedule or self.config.paths.entanglement_schedule,
                phase_schedule=phase_schedule or self.config.paths.phase_schedule,
                grid_points=sweep_settings.grid_points,
                magnitude_points=sweep_settings.magnitude_points,
                workers=sweep_settings.workers,
                cfg=self.integration,
                sign_policy=sign_policy
            )
            result = run_sweep(spec)

            csv_path = emit_csv(result.records, self.output_path(f"{experiment}.csv", output_dir))
            summary_path = emit_json(result.summary, self.output_path(f"{experiment}_summary.json", output_dir))
            response = {
                'success': result.passed,
                'experiment': experiment,
                'records': len(result.records),
                'statistics': result.summary['statistics'],
                'checks': result.summary['checks'],
                'files': {'csv': str(csv_path), 'summary': str(summary_path)},
                'exit_code': 0 if result.passed else 1
            }
            if not result.passed:
                failed = [name for name, check in result.summary['checks'].items() if not check['passed']]
                response.update({
                    'error_type': "检查未通过",
                    'error_message': f"未通过的检查项: {', '.join(failed)}",
                    'error_code': "SWEEP_CHECK_FAILED"
                })
            return response

        except Exception as e:
            self.logger.error(f"扫描失败: {e}")
            return self.handle_exception(e)
