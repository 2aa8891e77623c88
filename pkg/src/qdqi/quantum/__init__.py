"""态矢量模拟、DQI 态构造与相位原语"""

from qdqi.quantum.builder import (
    PipelineTrace,
    build_direct,
    build_qft_form,
    default_weights,
    dqi_polynomial_values,
    run_pipeline,
)
from qdqi.quantum.primitives import (
    sim_quadratic_form_phase,
    sim_quadratic_phase,
    sim_quantum_condition,
    sim_shifted_quadratic_phase,
)
from qdqi.quantum.statevector import RegisterLayout, SparseState, distance_up_to_phase_scale

__all__ = [
    "PipelineTrace",
    "RegisterLayout",
    "SparseState",
    "build_direct",
    "build_qft_form",
    "default_weights",
    "distance_up_to_phase_scale",
    "dqi_polynomial_values",
    "run_pipeline",
    "sim_quadratic_form_phase",
    "sim_quadratic_phase",
    "sim_quantum_condition",
    "sim_shifted_quadratic_phase",
]
