"""测试验证套件注册表与全部检查"""

import pytest

from qdqi.verify.suites import SUITES, SuiteContext, reference_instances, check, expand_suites, suite_checks

ALL_CHECKS = suite_checks(["all"])


class TestRegistry:
    """测试套件注册与展开"""

    def test_every_suite_has_checks(self):
        assert all(SUITES[name] for name in SUITES)

    def test_expand_all(self):
        assert expand_suites(["all"]) == list(SUITES)

    def test_expand_deduplicates(self):
        assert expand_suites(["Spectral", "gauss", "spectral"]) == ["spectral", "gauss"]

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="不支持的套件"):
            expand_suites(["nonsense"])

    def test_register_to_unknown_suite(self):
        with pytest.raises(ValueError):
            check("nonsense", "x")(lambda ctx: None)

    def test_check_names_are_unique(self):
        keys = [(c.suite, c.name) for c in ALL_CHECKS]
        assert len(keys) == len(set(keys))


class TestReferenceInstances:
    """测试验收实例"""

    def test_shapes(self):
        instances = reference_instances(42)
        assert (instances["opi5"].p, instances["opi5"].n, instances["opi5"].r) == (5, 2, 2)
        assert (instances["opi7"].p, instances["opi7"].n, instances["opi7"].r) == (7, 2, 3)
        assert instances["linsat5n3"].is_linear and instances["linsat5n3"].n == 3

    def test_cached_per_seed(self):
        assert reference_instances(7) is reference_instances(7)


class TestAllChecksPass:
    """默认容差下每一项检查都应通过"""

    @pytest.mark.parametrize("registered", ALL_CHECKS, ids=lambda c: f"{c.suite}/{c.name}")
    def test_check(self, registered):
        outcome = registered.func(SuiteContext())
        assert outcome.passed, f"实测 {outcome.measured}，界 {outcome.bound}，{outcome.detail}"
