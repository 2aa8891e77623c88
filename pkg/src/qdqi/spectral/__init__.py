"""Krawtchouk多项式、三对角谱问题与半圆律"""

from qdqi.spectral.krawtchouk import KrawtchoukBasis, krawtchouk_project, krawtchouk_table, scaled_krawtchouk
from qdqi.spectral.semicircle import SemicircleRow, semicircle_closed_form, semicircle_table
from qdqi.spectral.tridiagonal import (
    TridiagonalMatrix,
    build_A,
    expected_satisfied,
    max_eigpair,
    optimal_weights,
    spectral_fraction,
)

__all__ = [
    "KrawtchoukBasis",
    "SemicircleRow",
    "TridiagonalMatrix",
    "build_A",
    "expected_satisfied",
    "krawtchouk_project",
    "krawtchouk_table",
    "max_eigpair",
    "optimal_weights",
    "scaled_krawtchouk",
    "semicircle_closed_form",
    "semicircle_table",
    "spectral_fraction",
]
