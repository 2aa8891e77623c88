"""异常定义"""


class QdqiError(Exception):
    """qdqi所有异常的基类"""


class FieldMismatchError(QdqiError, ValueError):
    """两个域元素的模数不一致"""


class NoInverseError(QdqiError, ZeroDivisionError):
    """0在F_p中没有乘法逆元"""


class SingularMatrixError(QdqiError, ValueError):
    """对角矩阵含零元素"""


class DimensionMismatchError(QdqiError, ValueError):
    """向量长度、寄存器布局或矩阵形状不匹配"""


class ZeroNormError(QdqiError, ValueError):
    """态的范数为零，无法归一化"""


class NonUnitWeightError(QdqiError, ValueError):
    """权重向量不是单位向量"""


class PipelinePreconditionError(QdqiError):
    """实例不满足流水线的前置条件（例如 B ≠ 0）"""


class BudgetExceededError(QdqiError):
    """枚举规模超过预算"""

    def __init__(self, needed: int, budget: int, what: str = "枚举"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}规模 {needed} 超过预算 {budget}（可通过 QDQI_BUDGET 调整）")


class SpanError(QdqiError, ValueError):
    """多项式不在Krawtchouk基张成的空间内"""

    def __init__(self, residual: float, tolerance: float):
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(f"Krawtchouk投影重构残差 {residual:.3e} 超过容差 {tolerance:.1e}")


class DecoderError(QdqiError):
    """综合征译码失败"""

    def __init__(self, syndrome: tuple[int, ...], message: str):
        self.syndrome = tuple(syndrome)
        super().__init__(f"{message}: syndrome={list(self.syndrome)}")


class AmbiguousSyndromeError(DecoderError):
    """同一综合征对应多个低重量错误向量"""

    def __init__(self, syndrome: tuple[int, ...], candidates: list[tuple[int, ...]]):
        self.candidates = candidates
        super().__init__(syndrome, f"综合征不唯一，找到 {len(candidates)} 个候选，实例不满足可译码条件")


class SyndromeNotFoundError(DecoderError):
    """译码半径内没有错误向量产生该综合征"""

    def __init__(self, syndrome: tuple[int, ...], max_weight: int):
        self.max_weight = max_weight
        super().__init__(syndrome, f"重量 ≤ {max_weight} 的错误向量中找不到该综合征")
