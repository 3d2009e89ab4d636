"""
工具门面
为命令行提供统一的工具接口
"""
from typing import Any, Dict, Optional

from ..utils.config import AppConfig, config_manager
from ..utils.logger import get_logger
from ..utils.metrics import metrics_collector
from ..tools.training import TrainingTool
from ..tools.evaluation import EvaluationTool
from ..tools.experiment import ExperimentTool
from ..tools.schedule import ScheduleTool


class QnnToolFacade:
    """
    量子神经网络工具门面
    为各子命令提供统一的工具接口，协调各个具体工具模块
    """

    def __init__(self, config: Optional[AppConfig] = None):
        """
        初始化工具门面

        Args:
            config: 生效配置，默认取全局配置管理器
        """
        self.logger = get_logger("qnn_tool_facade")
        self.config = config or config_manager.get_config()

        self.training_tool = TrainingTool(self.config)
        self.evaluation_tool = EvaluationTool(self.config)
        self.experiment_tool = ExperimentTool(self.config)
        self.schedule_tool = ScheduleTool(self.config)
        self.logger.debug("工具门面初始化完成")

    def train(self, **kwargs) -> Dict[str, Any]:
        """训练纠缠指示器或相位指示器"""
        return self.training_tool.train(**kwargs)

    def evaluate(self, **kwargs) -> Dict[str, Any]:
        """对输入态求指示器输出和判据值"""
        return self.evaluation_tool.evaluate(**kwargs)

    def correct(self, **kwargs) -> Dict[str, Any]:
        """双拷贝相位校正"""
        return self.evaluation_tool.correct(**kwargs)

    def sweep(self, **kwargs) -> Dict[str, Any]:
        """运行扫描实验"""
        return self.experiment_tool.sweep(**kwargs)

    def list_experiments(self) -> Dict[str, Any]:
        return self.experiment_tool.list_experiments()

    def fit(self, **kwargs) -> Dict[str, Any]:
        """傅里叶拟合调度文件"""
        return self.schedule_tool.fit(**kwargs)

    def dump_preset(self, **kwargs) -> Dict[str, Any]:
        """导出预置调度"""
        return self.schedule_tool.dump_preset(**kwargs)

    def get_performance_metrics(self) -> Dict[str, Any]:
        """
        获取性能指标

        Returns:
            性能指标字典
        """
        try:
            return {
                'success': True,
                'data': metrics_collector.get_metrics()
            }
        except Exception as e:
            return self.training_tool.handle_exception(e)
