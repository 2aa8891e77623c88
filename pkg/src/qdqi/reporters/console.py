"""控制台输出"""

from rich.console import Console
from rich.table import Table

from qdqi.core.result import VerifyReport
from qdqi.reporters.base import BaseReporter, format_value


class ConsoleReporter(BaseReporter):
    """控制台报告器"""

    def __init__(self, console: Console | None = None):
        self.console = console or Console(record=True)

    def generate(self, report: VerifyReport) -> str:
        """打印验证报告，返回打印出的纯文本"""
        self.console.print("\n[bold blue]验证报告[/bold blue]")
        self.console.print(f"套件: {', '.join(report.suites)}")
        self.console.print(f"检查总数: {report.total_checks}")
        self.console.print(f"通过: {report.total_checks - report.failed_checks}")
        self.console.print(f"失败: {report.failed_checks}")
        self.console.print(f"通过率: {report.success_rate:.2%}")
        self.console.print(f"总耗时: {report.duration:.2f}秒")

        for suite, results in report.by_suite().items():
            table = Table(title=f"套件 {suite}")
            table.add_column("检查", style="cyan")
            table.add_column("状态", style="green")
            table.add_column("实测", style="magenta")
            table.add_column("界", style="yellow")
            table.add_column("耗时", style="blue")
            table.add_column("说明")
            for result in results:
                table.add_row(
                    result.name,
                    "✓" if result.is_success else "✗",
                    format_value(result.measured),
                    format_value(result.bound),
                    f"{result.duration:.3f}s",
                    result.error or result.detail,
                )
            self.console.print(table)

        if report.passed:
            self.console.print("\n[bold green]全部检查通过[/bold green]")
        else:
            failed = [f"{r.suite}/{r.name}" for r in report.results if not r.is_success]
            self.console.print(f"\n[bold red]未通过的检查:[/bold red] {', '.join(failed) or '(无检查)'}")

        return self.console.export_text() if self.console.record else ""
