"""验证结果数据结构"""

import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    """单项检查的结果"""

    suite: str
    name: str
    passed: bool = False
    measured: float | int | str | None = None  # 实测值
    bound: float | int | str | None = None  # 判定阈值或期望值
    detail: str = ""
    error: str | None = None  # 检查过程中抛出的异常
    duration: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def is_success(self) -> bool:
        return self.passed and self.error is None


@dataclass
class VerifyReport:
    """一次验证运行的完整报告"""

    results: list[CheckResult] = field(default_factory=list)
    suites: list[str] = field(default_factory=list)
    start_time: float | None = None
    end_time: float | None = None

    @property
    def total_checks(self) -> int:
        return len(self.results)

    @property
    def failed_checks(self) -> int:
        return sum(1 for r in self.results if not r.is_success)

    @property
    def passed(self) -> bool:
        return self.total_checks > 0 and self.failed_checks == 0

    @property
    def success_rate(self) -> float:
        if self.total_checks == 0:
            return 0.0
        return (self.total_checks - self.failed_checks) / self.total_checks

    @property
    def duration(self) -> float:
        """总耗时（秒）"""
        if self.start_time is None or self.end_time is None:
            return 0.0
        return self.end_time - self.start_time

    def by_suite(self) -> dict[str, list[CheckResult]]:
        grouped: dict[str, list[CheckResult]] = {}
        for result in self.results:
            grouped.setdefault(result.suite, []).append(result)
        return grouped

    def add_result(self, result: CheckResult) -> None:
        self.results.append(result)

    def finalize(self) -> None:
        """记录结束时间"""
        if self.end_time is None:
            self.end_time = time.time()
