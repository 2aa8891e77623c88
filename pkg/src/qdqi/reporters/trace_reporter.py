"""流水线轨迹的落盘

输出 step1.csv … step8.csv（各步快照）、trace.json（步骤名、寄存器布局、后选择概率、译码记录）
以及 decoder.log（含每次译码耗时，不参与逐字节比较）。
"""

import json
from pathlib import Path

from qdqi.quantum.builder import PipelineTrace
from qdqi.reporters.state_writer import save_state_csv
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)


def trace_summary(trace: PipelineTrace) -> dict:
    """trace.json 的内容，不含耗时等不确定字段"""
    return {
        "decoder_success": trace.decoder_success,
        "probabilities": trace.probabilities,
        "steps": [
            {
                "step": step,
                "name": trace.step_name(step),
                "registers": [list(reg) for reg in state.layout.registers],
                "support": len(state),
                "norm": state.norm(),
            }
            for step, state in sorted(trace.snapshots.items())
        ],
        "decoder_log": [
            {"syndrome": list(record.syndrome), "y": list(record.y), "weight": record.weight}
            for record in trace.decoder_records
        ],
    }


def save_trace(trace: PipelineTrace, out_dir: str | Path) -> Path:
    """
    把轨迹写入目录

    Args:
        trace: run_pipeline 的返回值
        out_dir: 输出目录，不存在时创建

    Returns:
        输出目录
    """
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    for step, state in sorted(trace.snapshots.items()):
        save_state_csv(state, directory / f"step{step}.csv")
    (directory / "trace.json").write_text(
        json.dumps(trace_summary(trace), indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    log_lines = [
        f"syndrome={list(r.syndrome)} y={list(r.y)} weight={r.weight} elapsed={r.elapsed:.6f}s"
        for r in trace.decoder_records
    ]
    (directory / "decoder.log").write_text("".join(line + "\n" for line in log_lines), encoding="utf-8")
    logger.debug(f"轨迹已写入 {directory}: {len(trace.snapshots)} 个快照")
    return directory
