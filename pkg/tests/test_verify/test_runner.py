"""测试验证运行器"""

import pytest

from qdqi.core.config import ToleranceConfig
from qdqi.runner import VerificationRunner
from qdqi.verify.suites import CheckOutcome, RegisteredCheck, SuiteContext


class TestVerificationRunner:
    """测试 VerificationRunner"""

    @pytest.fixture
    def runner(self):
        """默认上下文的运行器"""
        return VerificationRunner()

    def test_default_context(self, runner):
        assert runner.context.seed == 42
        assert runner.context.tolerances == ToleranceConfig()

    def test_run_check_success(self, runner):
        registered = RegisteredCheck("gauss", "ok", lambda ctx: CheckOutcome(True, 1e-15, 1e-9, "细节"))
        result = runner.run_check(registered)
        assert result.is_success
        assert result.measured == 1e-15
        assert result.detail == "细节"

    def test_run_check_captures_exception(self, runner):
        """异常写入结果而不中断运行"""

        def broken(ctx):
            raise RuntimeError("boom")

        result = runner.run_check(RegisteredCheck("spectral", "broken", broken))
        assert not result.passed
        assert result.error == "RuntimeError: boom"

    def test_context_is_passed(self):
        seen = []
        runner = VerificationRunner(SuiteContext(seed=7))
        runner.run_check(RegisteredCheck("gauss", "seed", lambda ctx: seen.append(ctx.seed) or CheckOutcome(True)))
        assert seen == [7]

    def test_run_suites(self, runner):
        report = runner.run(["semicircle", "gauss"])
        assert report.suites == ["semicircle", "gauss"]
        assert report.total_checks == 6
        assert report.passed
        assert report.end_time is not None
        assert [r.suite for r in report.results][:3] == ["semicircle"] * 3

    def test_tight_tolerance_fails(self):
        context = SuiteContext(tolerances=ToleranceConfig().overridden(1e-30))
        report = VerificationRunner(context).run(["gauss"])
        assert report.total_checks == 3
        assert not report.passed

    def test_unknown_suite(self, runner):
        with pytest.raises(ValueError):
            runner.run(["unknown"])
