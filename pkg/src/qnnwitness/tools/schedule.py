"""
调度工具
采样调度的傅里叶拟合与预置调度导出
"""
from typing import Any, Dict, Optional

from .base import BaseTool
from ..network.fourier_fit import fit_fourier
from ..network.presets import PRESETS, get_preset
from ..network.schedules import SampledSchedule, load_schedule, save_schedule


class ScheduleTool(BaseTool):
    """调度文件工具"""

    def fit(self, schedule_file: str, harmonics: str = "1",
            output: Optional[str] = None) -> Dict[str, Any]:
        """
        对调度文件做傅里叶拟合

        Args:
            schedule_file: 调度文件（非采样形式先按积分配置采样）
            harmonics: 谐波阶数，见 ParameterConverter.parse_harmonics
            output: 拟合结果输出路径，默认 output_dir/fitted_schedule.json

        Returns:
            每个参数函数的系数和残差
        """
        try:
            orders = self.converter.parse_harmonics(harmonics)
            schedule = load_schedule(schedule_file)
            samples = schedule if isinstance(schedule, SampledSchedule) else schedule.to_sampled(self.integration)
            result = fit_fourier(samples, orders)

            path = save_schedule(
                result.schedule,
                output or self.output_path("fitted_schedule.json"),
                extra={'fits': {name: fit.to_dict() for name, fit in result.fits.items()},
                       'source': str(schedule_file)}
            )
            return {
                'success': True,
                'source': str(schedule_file),
                'harmonics': orders,
                'rms': result.rms,
                'schedule': result.to_dict(),
                'file': str(path)
            }

        except Exception as e:
            self.logger.error(f"拟合失败: {e}")
            return self.handle_exception(e)

    def dump_preset(self, name: Optional[str] = None, output: Optional[str] = None,
                    sampled: bool = False) -> Dict[str, Any]:
        """
        导出预置调度

        Args:
            name: 预置名称，为空时列出全部预置
            output: 输出路径，为空时只在结果中返回文档
            sampled: 是否按积分配置采样后导出

        Returns:
            预置调度文档
        """
        try:
            if not name:
                return {
                    'success': True,
                    'data': [
                        {'name': preset.name, 'description': preset.description,
                         'form': preset.schedule.form, 'rms': preset.rms}
                        for preset in PRESETS.values()
                    ]
                }

            preset = get_preset(name)
            schedule = preset.schedule.to_sampled(self.integration) if sampled else preset.schedule
            response: Dict[str, Any] = {
                'success': True,
                'name': preset.name,
                'schedule': schedule.to_dict() if sampled else preset.to_dict()
            }
            if output:
                response['file'] = str(save_schedule(schedule, output, extra={'preset': preset.name}))
            return response

        except Exception as e:
            self.logger.error(f"导出预置调度失败: {e}")
            return self.handle_exception(e)
