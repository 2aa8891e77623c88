"""验证套件"""

from qdqi.verify.suites import SUITES, CheckOutcome, SuiteContext, check, expand_suites, suite_checks

__all__ = ["SUITES", "CheckOutcome", "SuiteContext", "check", "expand_suites", "suite_checks"]
