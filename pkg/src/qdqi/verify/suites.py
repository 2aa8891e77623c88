"""验证套件注册表

每个检查是一个接收 SuiteContext、返回 CheckOutcome 的函数，用 @check(suite, name) 注册。
套件名称 "all" 展开为全部套件。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import sqrt
from typing import Any, Callable

import numpy as np

from qdqi.core.config import DEFAULT_BUDGET, ToleranceConfig
from qdqi.core.field import PrimeModulus, legendre_symbol, mod_inverse
from qdqi.core.instance import QuadSatInstance, WeightVector
from qdqi.decoding.decoder import SyndromeCode, decode_brute, dual_min_distance, enumerate_errors
from qdqi.gauss.sums import (
    gauss_one,
    general_quad_sum_brute,
    general_quad_sum_closed,
    multidim_quad_sum,
    multidim_quad_sum_brute,
    omega,
    quad_gauss_brute,
    quad_gauss_closed,
)
from qdqi.model.opi import make_linear_opi, make_quadratic_opi
from qdqi.model.quadsat import (
    binomial_reference,
    has_full_row_rank,
    linear_image_counts,
    moment,
    sat_distribution,
    uniformity_closed_form,
    uniformity_enumerated,
)
from qdqi.quantum.builder import build_direct, build_qft_form, default_weights, dqi_polynomial_values, run_pipeline
from qdqi.quantum.primitives import (
    quadratic_phase_target,
    sim_quadratic_form_phase,
    sim_quadratic_phase,
    sim_quantum_condition,
    sim_shifted_quadratic_phase,
)
from qdqi.quantum.statevector import (
    RegisterLayout,
    SparseState,
    apply_to_register,
    distance_up_to_phase_scale,
    expectation_satisfied,
    f_alpha_matrix,
    satisfied_distribution,
)
from qdqi.spectral.krawtchouk import krawtchouk_project, krawtchouk_table
from qdqi.spectral.semicircle import semicircle_closed_form, semicircle_row
from qdqi.spectral.tridiagonal import build_A, expected_satisfied, max_eigpair

__all__ = [
    "CheckOutcome",
    "RegisteredCheck",
    "SUITES",
    "SuiteContext",
    "reference_instances",
    "check",
    "expand_suites",
    "suite_checks",
]


@dataclass
class SuiteContext:
    """检查运行时共享的参数"""

    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    budget: int = DEFAULT_BUDGET
    seed: int = 42


@dataclass
class CheckOutcome:
    """单个检查函数的返回值"""

    passed: bool
    measured: float | int | str | None = None
    bound: float | int | str | None = None
    detail: str = ""
    extra: dict[str, Any] = field(default_factory=dict)


CheckFn = Callable[[SuiteContext], CheckOutcome]


@dataclass(frozen=True)
class RegisteredCheck:
    suite: str
    name: str
    func: CheckFn


SUITES: dict[str, list[RegisteredCheck]] = {
    "gauss": [],
    "falpha": [],
    "primitives": [],
    "uniformity": [],
    "moments": [],
    "states": [],
    "decoder": [],
    "semicircle": [],
    "spectral": [],
}


def check(suite: str, name: str) -> Callable[[CheckFn], CheckFn]:
    """把检查函数注册到套件"""

    def decorator(func: CheckFn) -> CheckFn:
        if suite not in SUITES:
            raise ValueError(f"未知套件: {suite}")
        SUITES[suite].append(RegisteredCheck(suite, name, func))
        return func

    return decorator


def expand_suites(names: list[str]) -> list[str]:
    """
    展开套件名称，"all" 展开为全部套件，去重并保持顺序

    Raises:
        ValueError: 未知套件名称
    """
    expanded: list[str] = []
    for name in names:
        key = name.lower().strip()
        if key == "all":
            expanded.extend(SUITES)
        elif key in SUITES:
            expanded.append(key)
        else:
            raise ValueError(f"不支持的套件: {name}。支持的套件: all, {', '.join(SUITES)}")
    seen: set[str] = set()
    return [s for s in expanded if not (s in seen or seen.add(s))]


def suite_checks(names: list[str]) -> list[RegisteredCheck]:
    return [c for suite in expand_suites(names) for c in SUITES[suite]]


# ---------------------------------------------------------------------------
# 验收实例
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def reference_instances(seed: int) -> dict[str, QuadSatInstance]:
    """
    验收检查使用的固定实例

    - opi5 / opi7：二次OPI，p=5, n=2, r=2 与 p=7, n=2, r=3，ℓ=1 可唯一译码
    - linsat5n2：线性OPI p=5, n=2，对偶距离3
    - linsat5n3：线性OPI p=5, n=3，对偶距离4，ℓ=1 时期望公式精确成立
    """
    return {
        "opi5": make_quadratic_opi(5, 2, r=2, seed=seed),
        "opi7": make_quadratic_opi(7, 2, r=3, seed=seed),
        "linsat5n2": make_linear_opi(5, 2, r=2, seed=seed),
        "linsat5n3": make_linear_opi(5, 3, r=2, seed=seed),
    }


def _max(values: list[float]) -> float:
    return float(max(values)) if values else 0.0


# ---------------------------------------------------------------------------
# gauss
# ---------------------------------------------------------------------------


@check("gauss", "quad_gauss_closed_vs_brute")
def _quad_gauss(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for p in (3, 5, 7, 11, 13):
        modulus = PrimeModulus(p)
        errors.extend(abs(quad_gauss_closed(a) - quad_gauss_brute(a)) for a in modulus.elements())
    worst = _max(errors)
    return CheckOutcome(worst <= ctx.tolerances.gauss, worst, ctx.tolerances.gauss, f"{len(errors)} 个 (a, p)")


@check("gauss", "general_quad_sum_closed_vs_brute")
def _general_quad_sum(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for p in (3, 5, 7):
        elements = PrimeModulus(p).elements()
        for a, b, c in product(elements, repeat=3):
            errors.append(abs(general_quad_sum_closed(a, b, c) - general_quad_sum_brute(a, b, c)))
    worst = _max(errors)
    return CheckOutcome(worst <= ctx.tolerances.gauss, worst, ctx.tolerances.gauss, f"{len(errors)} 个 (a, b, c, p)")


@check("gauss", "multidim_quad_sum_closed_vs_brute")
def _multidim(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for p, max_n in ((3, 3), (5, 3), (7, 2)):
        for n in range(1, max_n + 1):
            for diagonal in product(range(1, p), repeat=n):
                errors.append(abs(multidim_quad_sum(diagonal, p) - multidim_quad_sum_brute(diagonal, p)))
    worst = _max(errors)
    return CheckOutcome(worst <= ctx.tolerances.gauss, worst, ctx.tolerances.gauss, f"{len(errors)} 个对角矩阵")


# ---------------------------------------------------------------------------
# falpha
# ---------------------------------------------------------------------------


@check("falpha", "defining_identity")
def _falpha_identity(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for p in (3, 5, 7):
        modulus = PrimeModulus(p)
        for alpha in range(p):
            matrix = f_alpha_matrix(alpha, p)
            for z, x in product(range(p), repeat=2):
                brute = general_quad_sum_brute(modulus(-x), modulus(z - alpha), modulus(0))
                errors.append(abs(matrix[z, x] - brute))
    worst = _max(errors)
    return CheckOutcome(worst <= ctx.tolerances.gauss, worst, ctx.tolerances.gauss, f"{len(errors)} 个矩阵元")


@check("falpha", "conjugate_of_printed_closed_form")
def _falpha_printed(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for p in (3, 5, 7):
        quarter = mod_inverse(4, p)
        for alpha, z, x in product(range(p), range(p), range(1, p)):
            exponent = -mod_inverse(x, p) * (z - alpha) ** 2 * quarter
            printed = legendre_symbol(x, p) * gauss_one(p) * omega(exponent, p)
            errors.append(abs(f_alpha_matrix(alpha, p)[z, x] - np.conj(printed)))
    worst = _max(errors)
    return CheckOutcome(worst <= ctx.tolerances.gauss, worst, ctx.tolerances.gauss, "x ≠ 0 的列")


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------

PRIMITIVE_PRIMES = (3, 5, 7, 11)


@check("primitives", "quadratic_phase_states")
def _quadratic_phase_states(ctx: SuiteContext) -> CheckOutcome:
    distances = []
    for p in PRIMITIVE_PRIMES:
        for a in range(p):
            state, _ = sim_quadratic_phase(a, p)
            distances.append(distance_up_to_phase_scale(state, quadratic_phase_target(a, p)))
    worst = _max(distances)
    tol = ctx.tolerances.state_distance
    return CheckOutcome(worst <= tol, worst, tol)


@check("primitives", "quadratic_phase_probability")
def _quadratic_phase_probability(ctx: SuiteContext) -> CheckOutcome:
    probabilities: dict[str, float] = {}
    slack = []
    for p in PRIMITIVE_PRIMES:
        for a in range(p):
            _, probability = sim_quadratic_phase(a, p)
            probabilities[f"p={p},a={a}"] = probability
            slack.append(abs(probability - 1 / 8) - 2 / p)
    worst = _max(slack)
    return CheckOutcome(
        worst <= 0,
        worst,
        0.0,
        "|P − 1/8| − 2/p 的最大值",
        extra={"probabilities": probabilities},
    )


@check("primitives", "shifted_quadratic_phase")
def _shifted_phase(ctx: SuiteContext) -> CheckOutcome:
    distances, stage_errors = [], []
    for p in PRIMITIVE_PRIMES:
        for a, b in product(range(p), repeat=2):
            state, probability = sim_shifted_quadratic_phase(a, b, p)
            _, base_probability = sim_quadratic_phase(a, p)
            distances.append(distance_up_to_phase_scale(state, quadratic_phase_target(a, p, shift=b)))
            stage_errors.append(abs(probability / base_probability - 1 / p))
    worst_distance, worst_stage = _max(distances), _max(stage_errors)
    tol = ctx.tolerances.state_distance
    return CheckOutcome(
        worst_distance <= tol and worst_stage <= 1e-12,
        worst_distance,
        tol,
        f"清除阶段概率与 1/p 的最大偏差 {worst_stage:.3e}",
        extra={"uncompute_deviation": worst_stage},
    )


@check("primitives", "quadratic_form_phase")
def _quadratic_form_phase(ctx: SuiteContext) -> CheckOutcome:
    distances = []
    for p in (3, 5, 7):
        for diagonal in product(range(p), repeat=2):
            state = sim_quadratic_form_phase(diagonal, p)
            x = np.stack(np.unravel_index(np.arange(p * p), (p, p)), axis=1)
            exponents = (x * x) @ np.array(diagonal) % p
            target = SparseState.from_dense(state.layout, np.exp(2j * np.pi * exponents / p))
            distances.append(distance_up_to_phase_scale(state, target))
    worst = _max(distances)
    tol = ctx.tolerances.state_distance
    return CheckOutcome(worst <= tol, worst, tol)


@check("primitives", "quantum_condition_builds_f0")
def _quantum_condition(ctx: SuiteContext) -> CheckOutcome:
    distances, probabilities = [], []
    for p in (3, 5, 7):
        f0 = f_alpha_matrix(0, p)
        transform = sim_quantum_condition(lambda x: x == 0, lambda x: f0[:, x], lambda x: f0[:, 0], p)
        layout = RegisterLayout.single("z", 1, p)
        inputs = [SparseState.basis(layout, (x,)) for x in range(p)]
        inputs.append(SparseState.from_dense(layout, np.arange(1, p + 1)))
        for state in inputs:
            result, probability = transform(state, 0)
            distances.append(distance_up_to_phase_scale(result, apply_to_register(state, "z", f0)))
            probabilities.append(probability)
    worst = _max(distances)
    tol = ctx.tolerances.state_distance
    return CheckOutcome(worst <= tol, worst, tol, f"后选择概率范围 [{min(probabilities):.4g}, {max(probabilities):.4g}]")


# ---------------------------------------------------------------------------
# uniformity
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _uniformity_rows(p: int, rank: int) -> tuple[tuple[float, float, float], ...]:
    """(|Pr − 1/p|, p^{−rank/2}, |枚举 − 闭式|)，遍历全部非零对角与 a"""
    modulus = PrimeModulus(p)
    rows = []
    for lambdas in product(range(1, p), repeat=rank):
        for a in modulus.elements():
            exact = uniformity_enumerated(lambdas, a)
            closed = uniformity_closed_form(lambdas, a)
            rows.append((float(abs(exact - Fraction(1, p))), p ** (-rank / 2), abs(float(exact) - closed)))
    return tuple(rows)


UNIFORMITY_CASES = [(p, rank) for p in (3, 5) for rank in range(1, 5)]


@check("uniformity", "deviation_within_bound")
def _uniformity_bound(ctx: SuiteContext) -> CheckOutcome:
    ratios = [dev / bound for p, rank in UNIFORMITY_CASES for dev, bound, _ in _uniformity_rows(p, rank)]
    worst = _max(ratios)
    return CheckOutcome(worst <= 1.0, worst, 1.0, "|Pr − 1/p| / p^{−rank/2} 的最大值")


@check("uniformity", "closed_form_vs_enumeration")
def _uniformity_closed(ctx: SuiteContext) -> CheckOutcome:
    errors = [err for p, rank in UNIFORMITY_CASES for _, _, err in _uniformity_rows(p, rank)]
    worst = _max(errors)
    tol = ctx.tolerances.uniformity
    return CheckOutcome(worst <= tol, worst, tol, f"{len(errors)} 个 (λ, a, p)")


LINEAR_IMAGE_CASES = [(3, 1, 2), (3, 2, 2), (3, 2, 3), (5, 1, 2), (5, 2, 2)]


@check("uniformity", "full_rank_image_uniform")
def _linear_image_uniform(ctx: SuiteContext) -> CheckOutcome:
    bad, total = 0, 0
    for p, m, n in LINEAR_IMAGE_CASES:
        for entries in product(range(p), repeat=m * n):
            B = np.array(entries, dtype=np.int64).reshape(m, n)
            if not has_full_row_rank(B, p):
                continue
            total += 1
            counts = linear_image_counts(B, p, ctx.budget)
            if len(counts) != p**m or set(counts.values()) != {p ** (n - m)}:
                bad += 1
    return CheckOutcome(bad == 0, bad, 0, f"{total} 个行满秩的 B，Bx 的每个取值恰好出现 p^(n−m) 次")


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------


def _moment_outcome(inst: QuadSatInstance, max_order: int, ctx: SuiteContext) -> CheckOutcome:
    dist = sat_distribution(inst, ctx.budget)
    reference = binomial_reference(inst.m, inst.r, inst.p)
    mismatched = [k for k in range(max_order + 1) if moment(dist, k) != moment(reference, k)]
    return CheckOutcome(
        not mismatched,
        len(mismatched),
        0,
        f"阶数 0..{max_order}，不相等的阶: {mismatched}",
        extra={"counts": list(dist.counts), "moments": [str(moment(dist, k)) for k in range(max_order + 1)]},
    )


@check("moments", "linsat_p5_n2_orders_0_to_2")
def _moments_n2(ctx: SuiteContext) -> CheckOutcome:
    return _moment_outcome(reference_instances(ctx.seed)["linsat5n2"], 2, ctx)


@check("moments", "linsat_p5_n3_orders_0_to_3")
def _moments_n3(ctx: SuiteContext) -> CheckOutcome:
    return _moment_outcome(reference_instances(ctx.seed)["linsat5n3"], 3, ctx)


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------

STATE_INSTANCES = ("opi5", "opi7")
STATE_ELL = 1


def _three_way(inst: QuadSatInstance, ctx: SuiteContext) -> dict[str, float]:
    w = default_weights(inst, STATE_ELL)
    states = {
        "direct": build_direct(inst, w, ctx.budget),
        "qftform": build_qft_form(inst, w, ctx.budget),
        "pipeline": run_pipeline(inst, w).final,
    }
    return {
        f"{a}~{b}": distance_up_to_phase_scale(states[a], states[b]) for a, b in combinations(states, 2)
    }


@check("states", "three_way_agreement")
def _three_way_agreement(ctx: SuiteContext) -> CheckOutcome:
    instances = reference_instances(ctx.seed)
    distances = {f"{key}:{pair}": d for key in STATE_INSTANCES for pair, d in _three_way(instances[key], ctx).items()}
    worst = _max(list(distances.values()))
    tol = ctx.tolerances.state_distance
    return CheckOutcome(worst <= tol, worst, tol, extra={"distances": distances})


@check("states", "distribution_identity")
def _distribution_identity(ctx: SuiteContext) -> CheckOutcome:
    deviations = []
    for key in STATE_INSTANCES:
        inst = reference_instances(ctx.seed)[key]
        w = default_weights(inst, STATE_ELL)
        measured = satisfied_distribution(build_direct(inst, w, ctx.budget), inst)
        counts = np.array(sat_distribution(inst, ctx.budget).counts, dtype=float)
        predicted = np.abs(dqi_polynomial_values(inst, w)) ** 2 * counts
        predicted /= predicted.sum()
        deviations.append(float(np.max(np.abs(measured - predicted))))
    worst = _max(deviations)
    tol = ctx.tolerances.distribution
    return CheckOutcome(worst <= tol, worst, tol)


@check("states", "expectation_exact_linsat")
def _expectation_exact(ctx: SuiteContext) -> CheckOutcome:
    inst = reference_instances(ctx.seed)["linsat5n3"]
    rng = np.random.default_rng(ctx.seed)
    errors = []
    for _ in range(20):
        w = WeightVector(tuple(rng.standard_normal(STATE_ELL + 1))).normalized()
        measured = expectation_satisfied(build_direct(inst, w, ctx.budget), inst)
        predicted = expected_satisfied(w, inst.m, STATE_ELL, inst.r, inst.p)
        errors.append(abs(measured - predicted))
    worst = _max(errors)
    tol = ctx.tolerances.expectation
    return CheckOutcome(worst <= tol, worst, tol, "20 个随机单位权重")


@check("states", "expectation_quadsat_bound")
def _expectation_quadsat(ctx: SuiteContext) -> CheckOutcome:
    inst = reference_instances(ctx.seed)["opi7"]
    w = default_weights(inst, STATE_ELL)
    measured = expectation_satisfied(build_direct(inst, w, ctx.budget), inst)
    predicted = expected_satisfied(w, inst.m, STATE_ELL, inst.r, inst.p)
    gap = abs(measured - predicted)
    bound = inst.m * sum(inst.p ** (-inst.rank(i) / 2) for i in range(inst.m)) + 1e-6
    return CheckOutcome(gap <= bound, gap, bound, f"实测 {measured:.12g}，公式 {predicted:.12g}")


# ---------------------------------------------------------------------------
# decoder
# ---------------------------------------------------------------------------


@check("decoder", "roundtrip_all_low_weight_errors")
def _decoder_roundtrip(ctx: SuiteContext) -> CheckOutcome:
    failures, total = 0, 0
    for key in STATE_INSTANCES:
        code = SyndromeCode.for_instance(reference_instances(ctx.seed)[key], STATE_ELL)
        for y in enumerate_errors(code.m, code.p, code.max_weight):
            total += 1
            if decode_brute(code, code.syndrome(y)) != y:
                failures += 1
    return CheckOutcome(failures == 0, failures, 0, f"共 {total} 个错误向量")


@check("decoder", "dual_distance_is_n_plus_1")
def _dual_distance(ctx: SuiteContext) -> CheckOutcome:
    found = {}
    for key in STATE_INSTANCES:
        inst = reference_instances(ctx.seed)[key]
        found[key] = (dual_min_distance(SyndromeCode.for_instance(inst, STATE_ELL), ctx.budget), inst.n + 1)
    passed = all(d == expected for d, expected in found.values())
    return CheckOutcome(passed, str({k: d for k, (d, _) in found.items()}), str({k: e for k, (_, e) in found.items()}))


# ---------------------------------------------------------------------------
# semicircle
# ---------------------------------------------------------------------------


@check("semicircle", "closed_form_at_one_twentieth")
def _semicircle_value(ctx: SuiteContext) -> CheckOutcome:
    value = semicircle_closed_form(1 / 20, 1 / 2)
    return CheckOutcome(abs(value - 0.7179) <= 1e-3, value, 0.7179, "ℓ/m = 1/20, r/p = 1/2，容差 1e-3")


@check("semicircle", "zero_degree_limit")
def _semicircle_limit(ctx: SuiteContext) -> CheckOutcome:
    ratios = [r / p for p in (2, 3, 5, 7, 11) for r in range(1, p)]
    mismatched = [q for q in ratios if semicircle_closed_form(0.0, q) != q]
    return CheckOutcome(not mismatched, len(mismatched), 0, "ℓ/m = 0 时应精确返回 r/p")


@check("semicircle", "finite_size_gap")
def _semicircle_gap(ctx: SuiteContext) -> CheckOutcome:
    small = semicircle_row(200, 20, 1, 2)
    large = semicircle_row(2000, 200, 1, 2)
    return CheckOutcome(
        small.gap < 0.04 and large.gap <= 0.02,
        small.gap,
        0.04,
        f"m=200 差距 {small.gap:.4g}；m=2000 差距 {large.gap:.4g}（界 0.02）",
        extra={"m200": small.gap, "m2000": large.gap, "closed_form": small.closed_form},
    )


# ---------------------------------------------------------------------------
# spectral
# ---------------------------------------------------------------------------

SPECTRAL_CASES = [(10, 3, 1, 2), (20, 5, 2, 5), (40, 10, 3, 7), (200, 20, 1, 2)]


@check("spectral", "eigenpair_vs_dense")
def _eigenpair(ctx: SuiteContext) -> CheckOutcome:
    residuals, value_errors = [], []
    for m, ell, r, p in SPECTRAL_CASES:
        matrix = build_A(m, ell, r, p)
        eigenvalue, w = max_eigpair(matrix)
        dense = float(np.linalg.eigvalsh(matrix.to_dense())[-1])
        scale = max(1.0, abs(dense))
        value_errors.append(abs(eigenvalue - dense) / scale)
        residuals.append(float(np.linalg.norm(matrix.matvec(w.as_array()) - eigenvalue * w.as_array())) / scale)
    worst = max(_max(residuals), _max(value_errors))
    tol = ctx.tolerances.eigen_residual
    return CheckOutcome(worst <= tol, worst, tol, "相对残差与相对特征值误差的最大值")


@check("spectral", "sign_flip_preserves_spectrum")
def _sign_flip(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for m, ell, r, p in SPECTRAL_CASES:
        matrix = build_A(m, ell, r, p)
        original = np.linalg.eigvalsh(matrix.to_dense())
        flipped = np.linalg.eigvalsh(matrix.flipped().to_dense())
        errors.append(float(np.max(np.abs(original - flipped))) / max(1.0, float(np.max(np.abs(original)))))
    worst = _max(errors)
    tol = ctx.tolerances.eigen_residual
    return CheckOutcome(worst <= tol, worst, tol)


KRAWTCHOUK_CASES = [(6, 1, 2), (10, 2, 5), (12, 3, 7)] + [(m, r, p) for m in (30, 60) for r, p in ((1, 2), (2, 5), (1, 7))]


@check("spectral", "krawtchouk_orthonormal")
def _krawtchouk_orthonormal(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for m, r, p in KRAWTCHOUK_CASES:
        basis = krawtchouk_table(m, r, p, m)
        errors.append(float(np.max(np.abs(basis.gram() - np.eye(m + 1)))))
    worst = _max(errors)
    return CheckOutcome(worst <= 1e-9, worst, 1e-9, f"max |Gram − I|，ℓ = m，(m, r, p) ∈ {KRAWTCHOUK_CASES}")


@check("spectral", "krawtchouk_recurrence")
def _krawtchouk_recurrence(ctx: SuiteContext) -> CheckOutcome:
    worst = _max([krawtchouk_table(m, r, p, m).recurrence_residual() for m, r, p in KRAWTCHOUK_CASES])
    return CheckOutcome(worst <= 1e-8, worst, 1e-8, "三项递推的最大相对残差")


@check("spectral", "dqi_profile_sign_pattern")
def _krawtchouk_sign(ctx: SuiteContext) -> CheckOutcome:
    inst = reference_instances(ctx.seed)["linsat5n3"]
    w = WeightVector((0.6, 0.8))
    basis = krawtchouk_table(inst.m, inst.r, inst.p, w.ell)
    coefficients = krawtchouk_project(dqi_polynomial_values(inst, w), basis).as_array() * sqrt(inst.p**inst.n)
    expected = np.array([(-1) ** k * w[k] for k in range(len(w))])
    worst = float(np.max(np.abs(coefficients - expected)))
    return CheckOutcome(worst <= 1e-9, worst, 1e-9, "系数应为 (−1)^k·w_k")


@check("spectral", "expected_fraction_at_zero_degree")
def _zero_degree(ctx: SuiteContext) -> CheckOutcome:
    errors = []
    for m, _, r, p in SPECTRAL_CASES:
        fraction = expected_satisfied(WeightVector((1.0,)), m, 0, r, p) / m
        errors.append(abs(fraction - r / p))
    worst = _max(errors)
    tol = ctx.tolerances.expectation
    return CheckOutcome(worst <= tol, worst, tol, "ℓ = 0 时满足比例为 r/p")
