"""态矢量与半圆律表的CSV输出

态矢量每行一个非零基态：`d1;d2;...;dk,re,im`，按数字元组字典序排列，不带表头，
实部虚部用 .17g 格式以保证逐字节可复现。
"""

import csv
import io
from pathlib import Path
from typing import Iterable

from qdqi.quantum.statevector import RegisterLayout, SparseState
from qdqi.spectral.semicircle import SemicircleRow

SEMICIRCLE_HEADER = ["m", "ell", "r", "p", "lambda_max", "expected_fraction", "closed_form", "gap"]


def state_to_csv(state: SparseState) -> str:
    lines = [f"{';'.join(str(d) for d in digits)},{amp.real:.17g},{amp.imag:.17g}" for digits, amp in state]
    return "".join(line + "\n" for line in lines)


def save_state_csv(state: SparseState, path: str | Path) -> Path:
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(state_to_csv(state), encoding="utf-8")
    return output_path


def parse_state_csv(text: str, layout: RegisterLayout) -> SparseState:
    """state_to_csv 的逆操作"""
    amplitudes = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        digits, re, im = line.rsplit(",", 2)
        amplitudes[tuple(int(d) for d in digits.split(";"))] = complex(float(re), float(im))
    return SparseState(amplitudes, layout)


def semicircle_to_csv(rows: Iterable[SemicircleRow]) -> str:
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(SEMICIRCLE_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.m,
                row.ell,
                row.r,
                row.p,
                f"{row.lambda_max:.17g}",
                f"{row.expected_fraction:.17g}",
                f"{row.closed_form:.17g}",
                f"{row.gap:.17g}",
            ]
        )
    return output.getvalue()
