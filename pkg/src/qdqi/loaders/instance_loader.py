"""实例文件的读写

文件为紧凑的UTF-8 JSON，键依次为 p, n, m, r, seed, B, D, F，矩阵按行存放。
"""

import json
from pathlib import Path

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from qdqi.core.instance import QuadSatInstance
from qdqi.model.opi import rs_matrix


class InstanceFile(BaseModel):
    """实例文件的结构"""

    p: int = Field(..., ge=3, description="奇素数模数")
    n: int = Field(..., ge=1, description="变量数")
    m: int = Field(..., ge=1, description="约束数")
    r: int = Field(..., ge=1, description="每个 F_i 的大小")
    seed: int | None = Field(default=None, description="生成实例时使用的随机种子")
    B: list[list[int]] = Field(..., description="m×n 线性部分")
    D: list[list[int]] = Field(..., description="m×n 二次部分的对角线")
    F: list[list[int]] = Field(..., description="m 个满足集合")

    @model_validator(mode="after")
    def _check_shapes(self) -> "InstanceFile":
        for name in ("B", "D"):
            rows = getattr(self, name)
            if len(rows) != self.m or any(len(row) != self.n for row in rows):
                raise ValueError(f"{name} 的形状必须是 {self.m}×{self.n}")
        if len(self.F) != self.m:
            raise ValueError(f"F 必须包含 {self.m} 个集合，收到 {len(self.F)}")
        if any(len(subset) != self.r for subset in self.F):
            raise ValueError(f"每个 F_i 的大小必须为 r={self.r}")
        return self


def _infer_kind(B: np.ndarray, D: np.ndarray, p: int) -> str:
    if not D.any():
        return "linsat"
    m, n = D.shape
    if not B.any() and m == p - 1 and n < p - 1 and np.array_equal(D, rs_matrix(p, n)):
        return "opi"
    return "quadsat"


def instance_to_dict(inst: QuadSatInstance) -> dict:
    return {
        "p": inst.p,
        "n": inst.n,
        "m": inst.m,
        "r": inst.r,
        "seed": inst.seed,
        "B": inst.B.tolist(),
        "D": inst.D.tolist(),
        "F": [list(subset) for subset in inst.F],
    }


def dump_instance(inst: QuadSatInstance) -> str:
    """序列化为紧凑 JSON，同一实例输出逐字节相同"""
    return json.dumps(instance_to_dict(inst), separators=(",", ":")) + "\n"


def parse_instance(text: str) -> QuadSatInstance:
    """
    从 JSON 文本解析实例

    Raises:
        ValueError: JSON 非法或结构、取值不合法
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"实例文件不是合法的JSON: {e}") from e
    if not isinstance(data, dict):
        raise ValueError("实例文件顶层必须是JSON对象")
    try:
        parsed = InstanceFile(**data)
    except ValidationError as e:
        raise ValueError(f"实例格式错误: {e}") from e

    B = np.array(parsed.B, dtype=np.int64)
    D = np.array(parsed.D, dtype=np.int64)
    return QuadSatInstance(
        modulus=parsed.p,
        B=B,
        D=D,
        F=tuple(tuple(subset) for subset in parsed.F),
        seed=parsed.seed,
        kind=_infer_kind(B, D, parsed.p),
    )


def load_instance(instance_path: str | Path) -> QuadSatInstance:
    """
    加载实例文件

    Args:
        instance_path: 实例文件路径

    Returns:
        QuadSatInstance对象

    Raises:
        FileNotFoundError: 文件不存在
        ValueError: 文件格式错误
    """
    instance_path = Path(instance_path)
    if not instance_path.exists():
        raise FileNotFoundError(f"实例文件不存在: {instance_path}")
    return parse_instance(instance_path.read_text(encoding="utf-8"))


def save_instance(inst: QuadSatInstance, path: str | Path) -> Path:
    """写出实例文件，必要时创建父目录"""
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(dump_instance(inst), encoding="utf-8")
    return output_path
