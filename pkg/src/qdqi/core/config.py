"""YML配置的数据类定义"""

import os
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, field_validator

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "QDQI_BUDGET"
CONFIG_ENV = "QDQI_CONFIG"


class LogConfig(BaseModel):
    """日志配置"""

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="INFO", description="日志级别"
    )
    format: Literal["detailed", "simple", "json"] = Field(
        default="detailed", description="日志格式：detailed(详细), simple(简单), json(JSON格式)"
    )


class ToleranceConfig(BaseModel):
    """各类数值比较的容差"""

    state_distance: float = Field(default=1e-9, gt=0, description="态之间相差相位与尺度的距离")
    gauss: float = Field(default=1e-9, gt=0, description="高斯和闭式与枚举之差")
    uniformity: float = Field(default=1e-12, gt=0, description="均匀性闭式与枚举概率之差")
    distribution: float = Field(default=1e-9, gt=0, description="满足数分布的最大偏差")
    expectation: float = Field(default=1e-9, gt=0, description="期望满足数之差")
    eigen_residual: float = Field(default=1e-10, gt=0, description="特征对残差 ‖Aw − λw‖")

    def overridden(self, tol: float | None) -> "ToleranceConfig":
        """用单一容差覆盖全部字段（命令行 --tol）"""
        if tol is None:
            return self
        return ToleranceConfig(**{name: tol for name in type(self).model_fields})


class OutputConfig(BaseModel):
    """输出配置"""

    format: list[Literal["console", "json", "csv"]] = Field(
        default=["console", "json"], description="验证报告的输出格式列表"
    )
    save_path: str = Field(default="./results/", description="保存路径")


class QdqiConfig(BaseModel):
    """主配置"""

    log: LogConfig = Field(default_factory=LogConfig, description="日志配置")
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig, description="容差配置")
    output: OutputConfig = Field(default_factory=OutputConfig, description="输出配置")
    enumeration_budget: int = Field(default=DEFAULT_BUDGET, ge=1, description="枚举基态数上限")
    seed: int = Field(default=42, ge=0, description="随机实例与随机权重的种子")


class RunConfig(BaseModel):
    """一次命令行调用的参数"""

    command: Literal["gen", "build", "verify", "semicircle"] = Field(..., description="子命令")
    instance: str | None = Field(default=None, description="实例文件路径")
    ell: int | None = Field(default=None, ge=0, description="DQI多项式次数ℓ")
    seed: int | None = Field(default=None, ge=0, description="随机种子")
    tol: float | None = Field(default=None, description="容差覆盖值")
    out: str | None = Field(default=None, description="输出目录或文件")
    method: Literal["direct", "qftform", "pipeline", "all"] = Field(default="direct", description="构造方法")
    suite: str = Field(default="all", description="验证套件")

    @field_validator("tol")
    @classmethod
    def _positive_tol(cls, value: float | None) -> float | None:
        if value is not None and value <= 0:
            raise ValueError("容差必须为正数")
        return value

    @field_validator("out")
    @classmethod
    def _writable_out(cls, value: str | None) -> str | None:
        if value is None:
            return value
        path = Path(value)
        # 向上找到第一个已存在的路径，检查其可写
        existing = path
        while not existing.exists() and existing != existing.parent:
            existing = existing.parent
        if existing.exists() and not os.access(existing if existing.is_dir() else existing.parent, os.W_OK):
            raise ValueError(f"输出路径不可写: {value}")
        return value


def resolve_budget(explicit: int | None = None, config: QdqiConfig | None = None) -> int:
    """
    确定枚举预算：显式参数 > 环境变量 QDQI_BUDGET > 配置 > 默认 10^7

    Raises:
        ValueError: 环境变量不是正整数
    """
    if explicit is not None:
        return int(explicit)
    env_value = os.environ.get(BUDGET_ENV)
    if env_value:
        try:
            budget = int(env_value)
        except ValueError as e:
            raise ValueError(f"{BUDGET_ENV} 必须是正整数，收到 {env_value!r}") from e
        if budget < 1:
            raise ValueError(f"{BUDGET_ENV} 必须是正整数，收到 {env_value!r}")
        return budget
    if config is not None:
        return config.enumeration_budget
    return DEFAULT_BUDGET
