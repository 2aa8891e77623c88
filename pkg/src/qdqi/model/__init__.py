"""max-QUADSAT 问题模型"""

from qdqi.model.opi import (
    make_linear_opi,
    make_quadratic_opi,
    make_random_quadsat,
    opi_objective,
    opi_subsets,
)
from qdqi.model.quadsat import (
    binomial_reference,
    constraint_values,
    default_ell,
    moment,
    objective_eval,
    sat_distribution,
    satisfied_count,
    uniformity_closed_form,
)

__all__ = [
    "binomial_reference",
    "constraint_values",
    "default_ell",
    "make_linear_opi",
    "make_quadratic_opi",
    "make_random_quadsat",
    "moment",
    "objective_eval",
    "opi_objective",
    "opi_subsets",
    "sat_distribution",
    "satisfied_count",
    "uniformity_closed_form",
]
