"""命令行入口

子命令：
- gen：生成实例文件
- build：构造DQI态并写出CSV
- verify：运行验证套件
- semicircle：输出半圆律对照表

退出码：0 通过，1 验证失败或意外错误，2 用法错误，3 译码失败。
"""

import argparse
import sys
import traceback
from pathlib import Path

from pydantic import ValidationError

from qdqi import __version__
from qdqi.core.config import QdqiConfig, RunConfig, resolve_budget
from qdqi.core.errors import BudgetExceededError, DecoderError, PipelinePreconditionError
from qdqi.core.instance import QuadSatInstance, WeightVector
from qdqi.decoding.decoder import SyndromeCode, dual_min_distance
from qdqi.loaders.config_loader import load_config
from qdqi.loaders.instance_loader import dump_instance, load_instance, save_instance
from qdqi.model.opi import make_linear_opi, make_quadratic_opi, make_random_quadsat
from qdqi.model.quadsat import default_ell
from qdqi.quantum.builder import build_direct, build_qft_form, default_weights, run_pipeline
from qdqi.quantum.statevector import distance_up_to_phase_scale, expectation_satisfied
from qdqi.reporters.console import ConsoleReporter
from qdqi.reporters.csv_reporter import CSVReporter
from qdqi.reporters.json_reporter import JSONReporter
from qdqi.reporters.state_writer import save_state_csv, semicircle_to_csv
from qdqi.reporters.trace_reporter import save_trace
from qdqi.runner import VerificationRunner
from qdqi.spectral.semicircle import semicircle_table
from qdqi.utils.logger import get_logger, setup_logger
from qdqi.verify.suites import SUITES, SuiteContext

setup_logger()
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DECODER = 3

METHODS = ("direct", "qftform", "pipeline")


class UsageError(Exception):
    """参数合法但取值不可用"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdqi", description="max-QUADSAT 上DQI的精确经典模拟与验证")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="YAML配置文件，未给出时读取 QDQI_CONFIG")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="覆盖配置中的日志级别")
    parser.add_argument("--log-format", choices=["detailed", "simple", "json"], help="覆盖配置中的日志格式")
    parser.add_argument("--budget", type=int, help="枚举基态数上限，优先于 QDQI_BUDGET")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="生成实例文件")
    kind = gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--opi", action="store_const", const="opi", dest="kind", help="二次OPI")
    kind.add_argument("--linsat", action="store_const", const="linsat", dest="kind", help="线性OPI（max-LINSAT）")
    kind.add_argument("--quadsat", action="store_const", const="quadsat", dest="kind", help="随机 max-QUADSAT")
    gen.add_argument("-p", type=int, required=True, help="奇素数模数")
    gen.add_argument("-n", type=int, required=True, help="变量数")
    gen.add_argument("-r", type=int, required=True, help="每个 F_i 的大小")
    gen.add_argument("-m", type=int, help="约束数（仅 --quadsat）")
    gen.add_argument("--seed", type=int, help="随机种子，默认取配置中的 seed")
    gen.add_argument("--out", help="输出文件，缺省时写到标准输出")

    build = sub.add_parser("build", help="构造DQI态")
    build.add_argument("--instance", required=True, help="实例文件")
    build.add_argument("--method", choices=[*METHODS, "all"], default="direct", help="构造方法")
    build.add_argument("--ell", type=int, help="DQI多项式次数ℓ，默认 ⌊n/2⌋")
    build.add_argument(
        "--ceil-radius", action="store_true", help="未给出 --ell 时取 ⌊(n+1)/2⌋ 而不是唯一译码半径 ⌊n/2⌋"
    )
    build.add_argument("--weights", help="逗号分隔的权重 w_0..w_ℓ，缺省时使用最优权重")
    build.add_argument("--tol", type=float, help="方法间距离的容差")
    build.add_argument("--out", help="输出目录")

    verify = sub.add_parser("verify", help="运行验证套件")
    verify.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES], help="套件名称")
    verify.add_argument("--tol", type=float, help="用单一容差覆盖全部容差")
    verify.add_argument("--seed", type=int, help="验收实例与随机权重的种子")
    verify.add_argument("--out", help="报告输出目录，缺省时使用配置中的 save_path")

    semicircle = sub.add_parser("semicircle", help="半圆律对照表")
    semicircle.add_argument("-m", type=int, default=200, help="约束数")
    semicircle.add_argument("-r", type=int, default=1, help="r")
    semicircle.add_argument("-p", type=int, default=2, help="p（任意不小于2的整数）")
    semicircle.add_argument("--ells", help="逗号分隔的ℓ列表，缺省时取 0..m 的二十等分点")
    semicircle.add_argument("--out", help="输出CSV文件，缺省时写到标准输出")
    return parser


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise UsageError(f"无法解析整数列表: {text}") from e


def _parse_weights(text: str) -> WeightVector:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise UsageError(f"无法解析权重: {text}") from e
    return WeightVector(tuple(values))


def cmd_gen(args: argparse.Namespace, config: QdqiConfig, budget: int) -> int:
    seed = config.seed if args.seed is None else args.seed
    if args.kind == "opi":
        inst = make_quadratic_opi(args.p, args.n, r=args.r, seed=seed)
    elif args.kind == "linsat":
        inst = make_linear_opi(args.p, args.n, r=args.r, seed=seed)
    else:
        if args.m is None:
            raise UsageError("--quadsat 需要 -m")
        inst = make_random_quadsat(args.p, args.n, args.m, args.r, seed=seed)

    ell = default_ell(inst.n)
    try:
        distance: int | str = dual_min_distance(SyndromeCode.for_instance(inst, ell), budget)
    except BudgetExceededError as e:
        logger.warning(f"跳过对偶距离计算: {e}")
        distance = "unknown"

    summary = f"m={inst.m} default_ell={ell} dual_distance={distance}"
    if args.out:
        path = save_instance(inst, args.out)
        logger.info(f"实例已保存: {path}")
        print(summary)
    else:
        sys.stdout.write(dump_instance(inst))
        logger.info(summary)
    return EXIT_OK


def _build_one(method: str, inst: QuadSatInstance, w: WeightVector, budget: int, out: Path | None):
    if method == "direct":
        return build_direct(inst, w, budget)
    if method == "qftform":
        return build_qft_form(inst, w, budget)
    trace = run_pipeline(inst, w)
    for name, probability in trace.probabilities.items():
        logger.debug(f"流水线 {name}: {probability:.12g}")
    if out is not None:
        save_trace(trace, out / "trace")
    return trace.final


def cmd_build(args: argparse.Namespace, config: QdqiConfig, budget: int) -> int:
    inst = load_instance(args.instance)
    logger.info(f"已加载实例: p={inst.p}, n={inst.n}, m={inst.m}, r={inst.r}")
    if args.weights:
        w = _parse_weights(args.weights)
        if args.ell is not None and args.ell != w.ell:
            raise UsageError(f"--ell={args.ell} 与权重个数 {len(w)} 不一致")
    else:
        ell = default_ell(inst.n, args.ceil_radius) if args.ell is None else args.ell
        w = default_weights(inst, ell)
    tol = config.tolerances.overridden(args.tol).state_distance
    out = Path(args.out) if args.out else None
    methods = list(METHODS) if args.method == "all" else [args.method]

    states = {}
    for method in methods:
        state = _build_one(method, inst, w, budget, out)
        states[method] = state
        fraction = expectation_satisfied(state, inst) / inst.m
        print(f"{method}: norm={state.norm():.12g} expected_fraction={fraction:.12g}")
        if out is not None:
            name = "state.csv" if len(methods) == 1 else f"state_{method}.csv"
            path = save_state_csv(state.normalized(), out / name)
            logger.info(f"态矢量已保存: {path}")

    worst = 0.0
    names = list(states)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            distance = distance_up_to_phase_scale(states[a], states[b])
            worst = max(worst, distance)
            print(f"distance {a}~{b}={distance:.3e}")
    if worst > tol:
        logger.error(f"构造方法之间的距离 {worst:.3e} 超过容差 {tol:.1e}")
        return EXIT_FAILURE
    logger.success(f"构造完成: ℓ={w.ell}, 方法 {', '.join(methods)}")
    return EXIT_OK


def create_reporters(config: QdqiConfig) -> list:
    """按配置的输出格式创建报告器"""
    reporters = []
    for fmt in config.output.format:
        if fmt == "console":
            reporters.append(ConsoleReporter())
        elif fmt == "json":
            reporters.append(JSONReporter())
        elif fmt == "csv":
            reporters.append(CSVReporter())
    return reporters


def cmd_verify(args: argparse.Namespace, config: QdqiConfig, budget: int) -> int:
    context = SuiteContext(
        tolerances=config.tolerances.overridden(args.tol),
        budget=budget,
        seed=config.seed if args.seed is None else args.seed,
    )
    report = VerificationRunner(context).run([args.suite])

    save_path = Path(args.out or config.output.save_path)
    for reporter in create_reporters(config):
        if isinstance(reporter, ConsoleReporter):
            reporter.generate(report)
            continue
        suffix = "json" if isinstance(reporter, JSONReporter) else "csv"
        file_path = save_path / f"report.{suffix}"
        reporter.save(report, str(file_path))
        logger.info(f"报告已保存: {file_path}")

    if not report.passed:
        logger.error(f"验证未通过: {report.failed_checks}/{report.total_checks} 项失败")
        return EXIT_FAILURE
    logger.success(f"验证通过: {report.total_checks} 项检查")
    return EXIT_OK


def cmd_semicircle(args: argparse.Namespace, config: QdqiConfig, budget: int) -> int:
    if args.m < 1:
        raise UsageError(f"-m 必须为正，收到 {args.m}")
    if args.ells:
        ells = _parse_int_list(args.ells)
    else:
        step = max(1, args.m // 20)
        ells = list(range(0, args.m + 1, step))
    rows = semicircle_table(args.m, ells, args.r, args.p)
    text = semicircle_to_csv(rows)
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"半圆律表已保存: {path}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "build": cmd_build,
    "verify": cmd_verify,
    "semicircle": cmd_semicircle,
}


def validate_run_config(args: argparse.Namespace) -> RunConfig:
    """用 RunConfig 校验解析后的命令行参数

    Raises:
        ValidationError: 参数取值不合法（如非正容差、不可写的输出路径）
    """
    return RunConfig(
        command=args.command,
        instance=getattr(args, "instance", None),
        ell=getattr(args, "ell", None),
        seed=getattr(args, "seed", None),
        tol=getattr(args, "tol", None),
        out=getattr(args, "out", None),
        method=getattr(args, "method", "direct"),
        suite=getattr(args, "suite", "all"),
    )


def main(argv: list[str] | None = None) -> int:
    """主函数，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = load_config(args.config)
        setup_logger(level=args.log_level or config.log.level, format_type=args.log_format or config.log.format)
        run = validate_run_config(args)
        logger.debug(f"运行参数: {run.model_dump(exclude_none=True)}")
        budget = resolve_budget(args.budget, config)
        if budget < 1:
            raise UsageError(f"--budget 必须为正，收到 {budget}")
        return COMMANDS[args.command](args, config, budget)
    except (ValidationError, UsageError, FileNotFoundError, PipelinePreconditionError, BudgetExceededError) as e:
        logger.error(f"用法错误: {e}")
        return EXIT_USAGE
    except DecoderError as e:
        logger.error(f"译码失败，实例不满足可译码条件: {e}")
        return EXIT_DECODER
    except ValueError as e:
        logger.error(f"参数错误: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"运行失败: {e}")
        logger.debug(traceback.format_exc())
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
