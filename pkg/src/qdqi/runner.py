"""主运行器（编排验证流程）"""

import time
import traceback

from qdqi.core.result import CheckResult, VerifyReport
from qdqi.verify.suites import RegisteredCheck, SuiteContext, expand_suites, suite_checks
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)


class VerificationRunner:
    """验证运行器，逐项执行套件中的检查并汇总为报告"""

    def __init__(self, context: SuiteContext | None = None):
        """
        初始化运行器

        Args:
            context: 容差、枚举预算与随机种子，默认使用内置值
        """
        self.context = context or SuiteContext()

    def run_check(self, registered: RegisteredCheck) -> CheckResult:
        """
        执行单个检查，异常记录到结果中而不向外抛出

        Args:
            registered: 注册的检查

        Returns:
            CheckResult对象
        """
        start = time.time()
        try:
            outcome = registered.func(self.context)
        except Exception as e:
            duration = time.time() - start
            logger.error(f"检查 {registered.suite}/{registered.name} 出错 (耗时: {duration:.2f}秒): {e}")
            logger.debug(f"错误详情:\n{traceback.format_exc()}")
            return CheckResult(
                suite=registered.suite,
                name=registered.name,
                passed=False,
                error=f"{type(e).__name__}: {e}",
                duration=duration,
            )

        duration = time.time() - start
        result = CheckResult(
            suite=registered.suite,
            name=registered.name,
            passed=bool(outcome.passed),
            measured=outcome.measured,
            bound=outcome.bound,
            detail=outcome.detail,
            duration=duration,
            extra=outcome.extra,
        )
        if result.is_success:
            logger.info(f"✅ {registered.suite}/{registered.name}: 实测 {outcome.measured}，界 {outcome.bound}")
        else:
            logger.warning(f"❌ {registered.suite}/{registered.name}: 实测 {outcome.measured}，界 {outcome.bound}")
        return result

    def run(self, suites: list[str]) -> VerifyReport:
        """
        运行若干套件

        Args:
            suites: 套件名称列表，可包含 "all"

        Returns:
            VerifyReport对象

        Raises:
            ValueError: 未知套件名称
        """
        names = expand_suites(suites)
        checks = suite_checks(names)
        report = VerifyReport(suites=names)
        report.start_time = time.time()
        logger.info(f"开始验证: 套件 {', '.join(names)}，共 {len(checks)} 项检查")

        for idx, registered in enumerate(checks, 1):
            logger.debug(f"检查进度: [{idx}/{len(checks)}] {registered.suite}/{registered.name}")
            report.add_result(self.run_check(registered))

        report.finalize()
        passed = report.total_checks - report.failed_checks
        logger.info(f"验证完成: 通过 {passed}/{report.total_checks}，耗时 {report.duration:.2f}秒")
        return report
