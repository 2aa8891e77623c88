"""测试验证结果结构"""

from qdqi.core.result import CheckResult, VerifyReport


class TestVerifyReport:
    """测试报告统计"""

    def test_empty_report_does_not_pass(self):
        report = VerifyReport()
        assert report.total_checks == 0
        assert not report.passed
        assert report.success_rate == 0.0
        assert report.duration == 0.0

    def test_counts_errors_as_failures(self):
        report = VerifyReport(start_time=10.0, end_time=12.5)
        report.add_result(CheckResult(suite="gauss", name="a", passed=True))
        report.add_result(CheckResult(suite="gauss", name="b", passed=True, error="RuntimeError: x"))
        report.add_result(CheckResult(suite="spectral", name="c", passed=False))
        assert report.failed_checks == 2
        assert not report.passed
        assert report.success_rate == 1 / 3
        assert report.duration == 2.5
        assert list(report.by_suite()) == ["gauss", "spectral"]

    def test_finalize_sets_end_time_once(self):
        report = VerifyReport(start_time=1.0)
        report.finalize()
        end = report.end_time
        report.finalize()
        assert end is not None and report.end_time == end
