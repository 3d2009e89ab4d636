"""
命令行入口
子命令 train、eval、correct、sweep、fit、dump-preset；结果以 JSON 输出到 stdout，日志输出到 stderr
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from . import __version__
from .facade.exception_handler import EXIT_FAILURE, EXIT_SUCCESS, ExceptionHandler
from .facade.tool_facade import QnnToolFacade
from .harness.emitter import to_json_compatible
from .harness.sweeps import EXPERIMENTS
from .network.presets import PRESETS
from .utils.config import ConfigManager
from .utils.logger import get_logger, setup_logging


def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器"""
    parser = argparse.ArgumentParser(
        prog="qnnwitness",
        description="两比特量子神经网络纠缠指示器：训练、求值、相位校正与实验扫描"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="JSON 配置文件")
    parser.add_argument("--output-dir", help="输出目录（覆盖配置与 QNNWITNESS_OUTPUT_DIR）")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="日志级别")
    parser.add_argument("--log-format", choices=["console", "json"], help="日志格式")
    parser.add_argument("--dt", type=float, help="积分步长（ns）")
    parser.add_argument("--t-final", type=float, help="演化时间（ns）")
    subparsers = parser.add_subparsers(dest="command", required=True)

    train = subparsers.add_parser("train", help="训练指示器")
    train.add_argument("target", choices=["entanglement", "phase"])
    train.add_argument("--init", help="初始调度（预置名称或调度文件）")
    train.add_argument("--learning-rate", type=float)
    train.add_argument("--max-epochs", type=int)
    train.add_argument("--rms-stop", type=float)
    train.add_argument("--mode", choices=["online", "batch"])
    train.add_argument("--gradient", choices=["adjoint", "finite_difference"])
    train.add_argument("--workers", type=int, help="批量模式下计算梯度的线程数")
    train.add_argument("--strict", action="store_true", default=None, help="未达到 rms_stop 时以收敛错误结束")
    train.add_argument("--phase-samples", type=int, default=11, help="相位训练集样本数")

    evaluate = subparsers.add_parser("eval", help="求指示器输出与 E_F")
    evaluate.add_argument("state", help='态字面量，如 "1,0,0,1" 或 "polar:a00,a01,a10,a11,xi,theta,phi"')
    evaluate.add_argument("--schedule", help="调度（预置名称或调度文件）")
    evaluate.add_argument("--functional", default="zz2", help="zz2 或 proj:N")

    correct = subparsers.add_parser("correct", help="双拷贝相位校正")
    correct.add_argument("state", help="态字面量")
    correct.add_argument("--basis", default="3", help="相位所在基矢：1/2/3 或 01/10/11")
    correct.add_argument("--phase-schedule", help="相位指示器调度")
    correct.add_argument("--entanglement-schedule", help="纠缠指示器调度")
    correct.add_argument("--sign-policy", choices=["probe", "positive"], default="probe")

    sweep = subparsers.add_parser("sweep", help="运行实验扫描")
    sweep.add_argument("experiment", help=f"实验名称（list 列出全部）: {', '.join(EXPERIMENTS)}")
    sweep.add_argument("--seed", type=int)
    sweep.add_argument("--n-states", type=int, help="随机态数量")
    sweep.add_argument("--grid", action="append", help="覆盖扫描轴 name=start:stop:count，可重复")
    sweep.add_argument("--grid-points", type=int, help="角度轴默认点数")
    sweep.add_argument("--magnitude-points", type=int, help="幅值轴默认点数")
    sweep.add_argument("--workers", type=int)
    sweep.add_argument("--sign-policy", choices=["probe", "positive"], default="probe")
    sweep.add_argument("--entanglement-schedule")
    sweep.add_argument("--phase-schedule")

    fit = subparsers.add_parser("fit", help="傅里叶拟合调度文件")
    fit.add_argument("schedule_file")
    fit.add_argument("--harmonics", default="1", help='1、2 或 "K_A=2,zeta=1"')
    fit.add_argument("--output", help="拟合结果输出路径")

    dump = subparsers.add_parser("dump-preset", help="导出预置调度")
    dump.add_argument("name", nargs="?", help=f"预置名称（为空时列出）: {', '.join(PRESETS)}")
    dump.add_argument("--output", help="输出路径")
    dump.add_argument("--sampled", action="store_true", help="按积分配置采样后导出")
    return parser


def load_config(args: argparse.Namespace) -> ConfigManager:
    """默认值 → 配置文件 → 环境变量 → 命令行参数"""
    manager = ConfigManager(args.config)
    manager.apply_overrides('paths', {'output_dir': args.output_dir})
    manager.apply_overrides('logging', {'level': args.log_level, 'format': args.log_format})
    manager.apply_overrides('integration', {'dt': args.dt, 't_final': args.t_final})
    if args.command == "train":
        manager.apply_overrides('training', {
            'learning_rate': args.learning_rate,
            'max_epochs': args.max_epochs,
            'rms_stop': args.rms_stop,
            'mode': args.mode,
            'gradient': args.gradient,
            'workers': args.workers,
            'strict': args.strict,
        })
    elif args.command == "sweep":
        manager.apply_overrides('sweep', {
            'seed': args.seed,
            'n_states': args.n_states,
            'grid_points': args.grid_points,
            'magnitude_points': args.magnitude_points,
            'workers': args.workers,
        })
    return manager


def dispatch(facade: QnnToolFacade, args: argparse.Namespace) -> Dict[str, Any]:
    """按子命令调用门面"""
    if args.command == "train":
        return facade.train(target=args.target, init=args.init, phase_samples=args.phase_samples)
    if args.command == "eval":
        return facade.evaluate(state=args.state, schedule=args.schedule, functional=args.functional)
    if args.command == "correct":
        return facade.correct(state=args.state, basis=args.basis, phase_schedule=args.phase_schedule,
                              entanglement_schedule=args.entanglement_schedule, sign_policy=args.sign_policy)
    if args.command == "sweep":
        if args.experiment == "list":
            return facade.list_experiments()
        return facade.sweep(experiment=args.experiment, grid=args.grid, sign_policy=args.sign_policy,
                            entanglement_schedule=args.entanglement_schedule,
                            phase_schedule=args.phase_schedule)
    if args.command == "fit":
        return facade.fit(schedule_file=args.schedule_file, harmonics=args.harmonics, output=args.output)
    return facade.dump_preset(name=args.name, output=args.output, sampled=args.sampled)


def emit(result: Dict[str, Any]) -> None:
    """结果写到 stdout（只含 JSON）"""
    json.dump(to_json_compatible(result), sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")
    sys.stdout.flush()


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行主函数

    Returns:
        退出码：0 成功，1 数值或收敛失败，2 用法错误
    """
    args = build_parser().parse_args(argv)

    try:
        manager = load_config(args)
    except Exception as e:
        result = ExceptionHandler().handle_exception(e)
        emit(result)
        return int(result['exit_code'])

    config = manager.get_config()
    setup_logging(
        level=config.logging.level,
        format_type=config.logging.format,
        enable_file_logging=config.logging.tool_log_enabled,
        log_dir=config.logging.tool_log_path
    )
    logger = get_logger("qnnwitness_main")
    logger.info(f"执行子命令: {args.command}", output_dir=config.paths.output_dir)

    facade = QnnToolFacade(config)
    result = ExceptionHandler().safe_execute(dispatch, facade, args)
    logger.debug("运行指标", metrics=facade.get_performance_metrics().get('data'))
    emit(result)
    return int(result.get('exit_code', EXIT_SUCCESS if result.get('success', True) else EXIT_FAILURE))


if __name__ == "__main__":
    sys.exit(main())
