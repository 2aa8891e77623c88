"""JSON格式输出"""

import json

import numpy as np

from qdqi.core.result import VerifyReport
from qdqi.reporters.base import BaseReporter


def _to_builtin(value: object) -> object:
    """numpy 标量与数组转为 JSON 可序列化的内置类型"""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    return str(value)


class JSONReporter(BaseReporter):
    """JSON报告器"""

    def generate(self, report: VerifyReport) -> str:
        """生成JSON报告"""
        data = {
            "summary": {
                "passed": report.passed,
                "suites": report.suites,
                "total_checks": report.total_checks,
                "failed_checks": report.failed_checks,
                "success_rate": report.success_rate,
            },
            "results": [],
        }

        for result in report.results:
            result_data = {
                "suite": result.suite,
                "name": result.name,
                "passed": result.is_success,
                "measured": result.measured,
                "bound": result.bound,
                "detail": result.detail,
            }
            if result.extra:
                result_data["extra"] = result.extra
            if result.error:
                result_data["error"] = result.error
            data["results"].append(result_data)

        return json.dumps(data, indent=2, ensure_ascii=False, default=_to_builtin)
