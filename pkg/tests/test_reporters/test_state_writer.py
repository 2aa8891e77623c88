"""测试态矢量、半圆律表与流水线轨迹的落盘"""

import csv
import io
import json

import pytest

from qdqi.quantum.builder import default_weights, run_pipeline
from qdqi.quantum.statevector import RegisterLayout, SparseState
from qdqi.reporters.state_writer import (
    SEMICIRCLE_HEADER,
    parse_state_csv,
    save_state_csv,
    semicircle_to_csv,
    state_to_csv,
)
from qdqi.reporters.trace_reporter import save_trace, trace_summary
from qdqi.spectral.semicircle import semicircle_table
from tests.fixtures.instances import opi5


class TestStateCsv:
    """测试态矢量CSV"""

    @pytest.fixture
    def state(self):
        """两个寄存器上的三个基态"""
        layout = RegisterLayout((("y", 2), ("syndrome", 1)), 5)
        return SparseState({(1, 0, 4): 0.5j, (0, 2, 3): -0.25, (0, 0, 0): 1 / 3}, layout)

    def test_sorted_lines(self, state):
        lines = state_to_csv(state).splitlines()
        assert lines[0] == "0;0;0,0.33333333333333331,0"
        assert lines[1] == "0;2;3,-0.25,0"
        assert lines[2] == "1;0;4,0,0.5"

    def test_parse_restores_amplitudes(self, state):
        parsed = parse_state_csv(state_to_csv(state), state.layout)
        assert parsed.amplitudes == state.amplitudes

    def test_save(self, state, tmp_path):
        path = save_state_csv(state, tmp_path / "a" / "state.csv")
        assert path.read_text(encoding="utf-8") == state_to_csv(state)


class TestSemicircleCsv:
    """测试半圆律表"""

    def test_header_and_rows(self):
        rows = list(csv.reader(io.StringIO(semicircle_to_csv(semicircle_table(50, [0, 5], 1, 2)))))
        assert rows[0] == SEMICIRCLE_HEADER
        assert [row[1] for row in rows[1:]] == ["0", "5"]
        assert float(rows[1][5]) == pytest.approx(0.5)


class TestTrace:
    """测试流水线轨迹"""

    @pytest.fixture
    def trace(self):
        """opi5 上 ℓ = 1 的流程"""
        inst = opi5()
        return run_pipeline(inst, default_weights(inst, 1))

    def test_summary(self, trace):
        summary = trace_summary(trace)
        assert summary["decoder_success"] is True
        assert [step["step"] for step in summary["steps"]] == list(range(1, 9))
        assert summary["steps"][4]["registers"] == [["y", 4], ["syndrome", 2]]
        assert all("elapsed" not in record for record in summary["decoder_log"])

    def test_save_trace(self, trace, tmp_path):
        directory = save_trace(trace, tmp_path / "trace")
        assert sorted(p.name for p in directory.glob("step*.csv")) == [f"step{k}.csv" for k in range(1, 9)]
        data = json.loads((directory / "trace.json").read_text(encoding="utf-8"))
        assert data["steps"][7]["name"] == "apply_qft"
        log = (directory / "decoder.log").read_text(encoding="utf-8").splitlines()
        assert len(log) == len(trace.decoder_records)
        assert all("elapsed=" in line for line in log)

    def test_final_snapshot_round_trip(self, trace, tmp_path):
        directory = save_trace(trace, tmp_path)
        final = trace.final
        parsed = parse_state_csv((directory / "step8.csv").read_text(encoding="utf-8"), final.layout)
        assert parsed.amplitudes == final.amplitudes
