"""基础Reporter接口"""

from abc import ABC, abstractmethod
from pathlib import Path

from qdqi.core.result import VerifyReport


class BaseReporter(ABC):
    """报告器基类"""

    @abstractmethod
    def generate(self, report: VerifyReport) -> str:
        """
        生成报告

        Args:
            report: 验证报告

        Returns:
            报告内容
        """
        pass

    def save(self, report: VerifyReport, path: str) -> None:
        """
        保存报告到文件

        Args:
            report: 验证报告
            path: 保存路径
        """
        output_path = Path(path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.generate(report), encoding="utf-8")


def format_value(value: object) -> str:
    """测量值与界的统一显示格式"""
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)
