"""报告器"""

from qdqi.reporters.base import BaseReporter
from qdqi.reporters.console import ConsoleReporter
from qdqi.reporters.csv_reporter import CSVReporter
from qdqi.reporters.json_reporter import JSONReporter
from qdqi.reporters.state_writer import save_state_csv, semicircle_to_csv, state_to_csv
from qdqi.reporters.trace_reporter import save_trace

__all__ = [
    "BaseReporter",
    "CSVReporter",
    "ConsoleReporter",
    "JSONReporter",
    "save_state_csv",
    "save_trace",
    "semicircle_to_csv",
    "state_to_csv",
]
