"""二次高斯和"""

from qdqi.gauss.sums import (
    general_quad_sum_brute,
    general_quad_sum_closed,
    general_quad_sum_value,
    multidim_quad_sum,
    multidim_quad_sum_brute,
    omega,
    omega_table,
    quad_gauss_brute,
    quad_gauss_closed,
)

__all__ = [
    "general_quad_sum_brute",
    "general_quad_sum_closed",
    "general_quad_sum_value",
    "multidim_quad_sum",
    "multidim_quad_sum_brute",
    "omega",
    "omega_table",
    "quad_gauss_brute",
    "quad_gauss_closed",
]
