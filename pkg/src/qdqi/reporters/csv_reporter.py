"""CSV格式输出"""

import csv
import io

from qdqi.core.result import VerifyReport
from qdqi.reporters.base import BaseReporter, format_value


class CSVReporter(BaseReporter):
    """CSV报告器，每项检查一行"""

    HEADER = ["suite", "name", "status", "measured", "bound", "detail", "error"]

    def generate(self, report: VerifyReport) -> str:
        """生成CSV报告"""
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(self.HEADER)
        for result in report.results:
            writer.writerow(
                [
                    result.suite,
                    result.name,
                    "pass" if result.is_success else "fail",
                    format_value(result.measured),
                    format_value(result.bound),
                    result.detail,
                    result.error or "",
                ]
            )
        return output.getvalue()
