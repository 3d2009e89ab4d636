"""
求值工具
对单个输入态求指示器输出、判据值，以及双拷贝相位校正
"""
from typing import Any, Dict, Optional

from .base import BaseTool
from ..core.measures import concurrence, entanglement_of_formation
from ..network.correction import corrected_entanglement
from ..network.indicators import evaluate_indicator
from ..network.presets import resolve_schedule


class EvaluationTool(BaseTool):
    """指示器求值工具"""

    def evaluate(self, state: str, schedule: Optional[str] = None,
                 functional: str = "zz2") -> Dict[str, Any]:
        """
        求指示器输出和 E_F、共生度

        Args:
            state: 态字面量
            schedule: 调度引用，默认取配置中的纠缠指示器调度
            functional: 输出泛函 zz2 或 proj:N

        Returns:
            结果字典
        """
        try:
            psi = self.converter.parse_state(state)
            output_functional = self.converter.parse_functional(functional)
            reference = schedule or self.config.paths.entanglement_schedule
            indicator = evaluate_indicator(psi, resolve_schedule(reference), output_functional, self.integration)
            self.logger.debug(f"求值完成: {output_functional.label} = {indicator:.6g}", schedule=reference)
            return {
                'success': True,
                'state': psi.to_list(),
                'schedule': str(reference),
                'functional': output_functional.label,
                'indicator': indicator,
                'e_f': entanglement_of_formation(psi),
                'concurrence': concurrence(psi)
            }

        except Exception as e:
            self.logger.error(f"求值失败: {e}")
            return self.handle_exception(e)

    def correct(self, state: str, basis: str = "3", phase_schedule: Optional[str] = None,
                entanglement_schedule: Optional[str] = None, sign_policy: str = "probe") -> Dict[str, Any]:
        """
        相位校正后的纠缠指示器

        Args:
            state: 态字面量
            basis: 相位所在基矢 1/2/3 或 01/10/11
            phase_schedule: 相位指示器调度，默认取配置
            entanglement_schedule: 纠缠指示器调度，默认取配置
            sign_policy: probe 或 positive

        Returns:
            结果字典
        """
        try:
            psi = self.converter.parse_state(state)
            basis_index = self.converter.parse_basis_index(basis)
            phase_reference = phase_schedule or self.config.paths.phase_schedule
            ent_reference = entanglement_schedule or self.config.paths.entanglement_schedule
            result = corrected_entanglement(
                psi, basis_index,
                resolve_schedule(phase_reference),
                resolve_schedule(ent_reference),
                self.integration,
                sign_policy=sign_policy
            )
            self.logger.info(f"相位校正: {result.uncorrected:.4f} → {result.corrected:.4f}",
                             phase=result.applied_phase, basis=basis_index)
            document = result.to_dict()
            document.update({
                'success': True,
                'state': psi.to_list(),
                'basis_index': basis_index,
                'sign_policy': sign_policy,
                'schedules': {'phase': str(phase_reference), 'entanglement': str(ent_reference)}
            })
            return document

        except Exception as e:
            self.logger.error(f"相位校正失败: {e}")
            return self.handle_exception(e)
