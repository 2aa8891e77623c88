"""二项权重下正交归一的Krawtchouk多项式

数值表由 N_k(s) = p^k·K_k(s) 的精确整数递推得到，归一化与权重在对数域中施加，
m 较大或 q 远离 1/2 时 K_k(s) 的量级可达 1e25 以上而不损失相对精度。
"""

from dataclasses import dataclass
from math import copysign, exp, log, sqrt

import numpy as np
from scipy.special import gammaln
from scipy.stats import binom

from qdqi.core.errors import SpanError
from qdqi.core.instance import WeightVector


def success_probability(r: int, p: int) -> float:
    """q = r/p，p 只需是不小于2的整数"""
    if int(p) != p or p < 2:
        raise ValueError(f"p 必须是不小于2的整数，收到 {p}")
    if not 1 <= r <= p - 1:
        raise ValueError(f"r 必须在 1..{p - 1} 内，收到 r={r}")
    return r / p


def recurrence_coefficients(m: int, q: float, k: int) -> tuple[float, float, float]:
    """
    三项递推 s·K_k = a_{k0}K_k − a_{k+}K_{k+1} − a_{k−}K_{k−1} 的系数

    Returns:
        (a_{k0}, a_{k+}, a_{k−})
    """
    a0 = q * (m - k) + k * (1 - q)
    a_plus = sqrt(q * (1 - q) * (m - k) * (k + 1))
    a_minus = sqrt(q * (1 - q) * (m - k + 1) * k)
    return a0, a_plus, a_minus


def scaled_krawtchouk(m: int, r: int, p: int, ell: int) -> list[list[int]]:
    """
    N_k(s) = p^k·K_k(s) 的精确整数表（K_k 未归一化）

    (k+1)·N_{k+1} = (r(m−k) + k(p−r) − p·s)·N_k − (m−k+1)·r(p−r)·N_{k−1}，除法总是整除
    """
    rows = [[1] * (m + 1)]
    previous = [0] * (m + 1)
    for k in range(ell):
        current = rows[k]
        rows.append(
            [
                ((r * (m - k) + k * (p - r) - p * s) * current[s] - (m - k + 1) * r * (p - r) * previous[s]) // (k + 1)
                for s in range(m + 1)
            ]
        )
        previous = current
    return rows


def _signed_exp(integers: list[int], log_scale: np.ndarray) -> np.ndarray:
    """sign(N)·exp(log|N| + log_scale)，N = 0 时为 0"""
    out = np.zeros(len(integers))
    for s, value in enumerate(integers):
        if value:
            out[s] = copysign(exp(log(abs(value)) + log_scale[s]), value)
    return out


@dataclass(frozen=True, eq=False)
class KrawtchoukBasis:
    """K_k(s) 数值表，k = 0..ℓ，s = 0..m"""

    m: int
    q: float
    values: np.ndarray  # (ℓ+1)×(m+1)
    weights: np.ndarray  # 二项权重 b(s)
    functions: np.ndarray  # √b(s)·K_k(s)，在对数域中计算

    @property
    def ell(self) -> int:
        return int(self.values.shape[0]) - 1

    def inner(self, f: np.ndarray, g: np.ndarray) -> float:
        """⟨f, g⟩_binom = Σ_s b(s) f(s) g(s)"""
        return float(np.sum(self.weights * np.asarray(f) * np.asarray(g)))

    def gram(self) -> np.ndarray:
        return self.functions @ self.functions.T

    def recurrence_residual(self) -> float:
        """
        递推关系在整张表上的最大相对残差

        每个 (k, s) 的残差除以 max(1, 参与求和的各项绝对值)
        """
        s = np.arange(self.m + 1)
        worst = 0.0
        for k in range(self.ell):
            a0, a_plus, a_minus = recurrence_coefficients(self.m, self.q, k)
            previous = self.values[k - 1] if k > 0 else np.zeros(self.m + 1)
            terms = np.abs([s * self.values[k], a0 * self.values[k], a_plus * self.values[k + 1], a_minus * previous])
            rhs = a0 * self.values[k] - a_plus * self.values[k + 1] - a_minus * previous
            scale = np.maximum(1.0, terms.max(axis=0))
            worst = max(worst, float(np.max(np.abs(s * self.values[k] - rhs) / scale)))
        return worst


def krawtchouk_table(m: int, r: int, p: int, ell: int) -> KrawtchoukBasis:
    """
    生成正交归一Krawtchouk多项式的数值表，K_0 = 1

    K_k(s) = N_k(s) / √(C(m,k)·(r(p−r))^k)

    Args:
        m: 约束数
        r, p: 成功概率 q = r/p
        ell: 最高次数，ℓ ≤ m
    """
    q = success_probability(r, p)
    if not 0 <= ell <= m:
        raise ValueError(f"要求 0 ≤ ℓ ≤ m，收到 ℓ={ell}, m={m}")
    s = np.arange(m + 1)
    log_weights = binom.logpmf(s, m, q)
    values = np.zeros((ell + 1, m + 1))
    functions = np.zeros((ell + 1, m + 1))
    for k, integers in enumerate(scaled_krawtchouk(m, r, p, ell)):
        log_norm = 0.5 * (gammaln(m + 1) - gammaln(k + 1) - gammaln(m - k + 1) + k * log(r * (p - r)))
        values[k] = _signed_exp(integers, np.full(m + 1, -log_norm))
        functions[k] = _signed_exp(integers, 0.5 * log_weights - log_norm)
    weights = binom.pmf(s, m, q)
    for table in (values, functions, weights):
        table.setflags(write=False)
    return KrawtchoukBasis(m=m, q=q, values=values, weights=weights, functions=functions)


def krawtchouk_project(p_values: np.ndarray, basis: KrawtchoukBasis, tol: float = 1e-9) -> WeightVector:
    """
    把 P(s) 展开为 Σ_k w'_k K_k(s)，w'_k = ⟨K_k, P⟩_binom

    Raises:
        SpanError: 相对重构残差超过 tol（P 的次数高于 ℓ）
    """
    values = np.asarray(p_values, dtype=float)
    if values.shape != (basis.m + 1,):
        raise ValueError(f"P 需要 {basis.m + 1} 个取值，收到 {values.shape}")
    coefficients = basis.functions @ (np.sqrt(basis.weights) * values)
    reconstruction = coefficients @ basis.values
    scale = sqrt(basis.inner(values, values))
    residual = sqrt(basis.inner(values - reconstruction, values - reconstruction))
    relative = residual / scale if scale > 0 else residual
    if relative > tol:
        raise SpanError(relative, tol)
    return WeightVector(tuple(coefficients))
