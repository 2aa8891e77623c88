"""三对角矩阵 A^{(m,ℓ,d)} 及其最大特征对

特征值用Sturm序列二分求得，特征向量用带状求解的逆迭代求得。
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np
from scipy.linalg import LinAlgError, solve_banded

from qdqi.core.errors import NonUnitWeightError
from qdqi.core.instance import WeightVector
from qdqi.spectral.krawtchouk import success_probability
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)

BISECTION_STEPS = 200
INVERSE_ITERATIONS = 4


@dataclass(frozen=True, eq=False)
class TridiagonalMatrix:
    """对称三对角矩阵"""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self) -> None:
        diag = np.asarray(self.diag, dtype=float)
        offdiag = np.asarray(self.offdiag, dtype=float)
        if offdiag.shape != (max(diag.size - 1, 0),):
            raise ValueError(f"次对角线长度 {offdiag.size} 与主对角线长度 {diag.size} 不匹配")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def size(self) -> int:
        return int(self.diag.size)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        result = self.diag * v
        result[:-1] += self.offdiag * v[1:]
        result[1:] += self.offdiag * v[:-1]
        return result

    def quadratic_form(self, w: np.ndarray) -> float:
        return float(np.dot(w, self.matvec(w)))

    def flipped(self) -> TridiagonalMatrix:
        """次对角线取负，等价于把 w_k 乘以 (−1)^k"""
        return TridiagonalMatrix(self.diag.copy(), -self.offdiag)

    def gershgorin_bounds(self) -> tuple[float, float]:
        radius = np.zeros(self.size)
        radius[:-1] += np.abs(self.offdiag)
        radius[1:] += np.abs(self.offdiag)
        return float(np.min(self.diag - radius)), float(np.max(self.diag + radius))


def d_param(r: int, p: int) -> float:
    """d = (p − 2r)/√(r(p − r))"""
    success_probability(r, p)
    return (p - 2 * r) / sqrt(r * (p - r))


def build_A(m: int, ell: int, r: int, p: int) -> TridiagonalMatrix:
    """
    构造 A^{(m,ℓ,d)}：主对角线 k·d，次对角线 a_k = √(k(m−k+1))

    Raises:
        ValueError: ℓ 不在 [0, m] 内或 r ∉ {1..p−1}
    """
    d = d_param(r, p)
    if not 0 <= ell <= m:
        raise ValueError(f"要求 0 ≤ ℓ ≤ m，收到 ℓ={ell}, m={m}")
    k = np.arange(ell + 1)
    diag = k * d
    offdiag = np.sqrt(k[1:] * (m - k[1:] + 1.0))
    return TridiagonalMatrix(diag, offdiag)


def sturm_count(matrix: TridiagonalMatrix, x: float) -> int:
    """小于 x 的特征值个数（LDLᵀ 主元的负号个数）"""
    count = 0
    pivot = 1.0
    tiny = np.finfo(float).tiny
    for i in range(matrix.size):
        coupling = matrix.offdiag[i - 1] ** 2 / pivot if i > 0 else 0.0
        pivot = matrix.diag[i] - x - coupling
        if pivot == 0.0:
            pivot = -tiny
        if pivot < 0:
            count += 1
    return count


def _bisect_largest(matrix: TridiagonalMatrix) -> float:
    lo, hi = matrix.gershgorin_bounds()
    lo, hi = lo - 1.0, hi + 1.0
    n = matrix.size
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if sturm_count(matrix, mid) < n:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _inverse_iteration(matrix: TridiagonalMatrix, eigenvalue: float) -> np.ndarray:
    n = matrix.size
    scale = max(1.0, abs(eigenvalue))
    shift = eigenvalue + 1e-12 * scale
    banded = np.zeros((3, n))
    banded[0, 1:] = matrix.offdiag
    banded[1, :] = matrix.diag - shift
    banded[2, :-1] = matrix.offdiag
    vector = np.ones(n) / sqrt(n)
    for _ in range(INVERSE_ITERATIONS):
        try:
            vector = solve_banded((1, 1), banded, vector)
        except LinAlgError:
            banded[1, :] -= 1e-10 * scale
            vector = solve_banded((1, 1), banded, vector)
        vector /= np.linalg.norm(vector)
    return vector


def max_eigpair(matrix: TridiagonalMatrix) -> tuple[float, WeightVector]:
    """
    最大特征值及单位特征向量，符号固定为 w_0 ≥ 0

    Returns:
        (λ_max, w)
    """
    if matrix.size == 1:
        return float(matrix.diag[0]), WeightVector((1.0,))
    eigenvalue = _bisect_largest(matrix)
    vector = _inverse_iteration(matrix, eigenvalue)
    leading = vector[np.flatnonzero(np.abs(vector) > 1e-300)[0]]
    if vector[0] < 0 or (vector[0] == 0 and leading < 0):
        vector = -vector
    refined = matrix.quadratic_form(vector)
    residual = float(np.linalg.norm(matrix.matvec(vector) - refined * vector))
    logger.debug(f"最大特征对: λ={refined:.15g}, 残差={residual:.3e}, 维数={matrix.size}")
    return refined, WeightVector(tuple(vector))


def expected_satisfied(w: WeightVector | np.ndarray, m: int, ell: int, r: int, p: int, tol: float = 1e-9) -> float:
    """
    期望满足数 mr/p + √(r(p−r))/p · wᵀAw（次对角线取正）

    Raises:
        NonUnitWeightError: ‖w‖ ≠ 1 或长度不是 ℓ+1
    """
    weights = w if isinstance(w, WeightVector) else WeightVector(tuple(np.ravel(w)))
    if weights.ell != ell:
        raise NonUnitWeightError(f"权重长度 {len(weights)} 与 ℓ+1 = {ell + 1} 不一致")
    if not weights.is_unit(tol):
        raise NonUnitWeightError(f"权重向量范数为 {weights.norm:.12g}，要求为1")
    matrix = build_A(m, ell, r, p)
    return m * r / p + sqrt(r * (p - r)) / p * matrix.quadratic_form(weights.as_array())


def optimal_weights(m: int, ell: int, r: int, p: int) -> tuple[float, WeightVector]:
    """A^{(m,ℓ,d)} 的最大特征对，即最优权重"""
    return max_eigpair(build_A(m, ell, r, p))


def spectral_fraction(m: int, ell: int, r: int, p: int) -> tuple[float, float]:
    """
    最优权重下的期望满足比例

    Returns:
        (λ_max, (mr/p + √(r(p−r))/p·λ_max)/m)
    """
    eigenvalue, _ = optimal_weights(m, ell, r, p)
    return eigenvalue, (m * r / p + sqrt(r * (p - r)) / p * eigenvalue) / m
