"""半圆律闭式及其与有限规模特征值的对照表"""

from dataclasses import dataclass
from math import sqrt
from typing import Iterable

from qdqi.spectral.tridiagonal import spectral_fraction


def semicircle_closed_form(ell_over_m: float, r_over_p: float) -> float:
    """
    (√(ℓ/m·(1−r/p)) + √(r/p·(1−ℓ/m)))²；ℓ/m ≥ 1 − r/p 时为1

    Raises:
        ValueError: 参数不在 [0, 1] 内
    """
    if not 0.0 <= ell_over_m <= 1.0 or not 0.0 <= r_over_p <= 1.0:
        raise ValueError(f"参数必须在 [0, 1] 内，收到 ℓ/m={ell_over_m}, r/p={r_over_p}")
    if ell_over_m >= 1.0 - r_over_p:
        return 1.0
    if ell_over_m == 0.0:
        return r_over_p
    value = (sqrt(ell_over_m * (1 - r_over_p)) + sqrt(r_over_p * (1 - ell_over_m))) ** 2
    return min(max(value, 0.0), 1.0)


@dataclass
class SemicircleRow:
    """semicircle 命令输出的一行"""

    m: int
    ell: int
    r: int
    p: int
    lambda_max: float
    expected_fraction: float
    closed_form: float

    @property
    def gap(self) -> float:
        return abs(self.expected_fraction - self.closed_form)


def semicircle_row(m: int, ell: int, r: int, p: int) -> SemicircleRow:
    eigenvalue, fraction = spectral_fraction(m, ell, r, p)
    return SemicircleRow(
        m=m,
        ell=ell,
        r=r,
        p=p,
        lambda_max=eigenvalue,
        expected_fraction=fraction,
        closed_form=semicircle_closed_form(ell / m, r / p),
    )


def semicircle_table(m: int, ells: Iterable[int], r: int, p: int) -> list[SemicircleRow]:
    return [semicircle_row(m, ell, r, p) for ell in ells]
