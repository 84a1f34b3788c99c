"""Exact computations with the invariants of two 3x3 matrices."""

from ._core import (
    PipelineError,
    Poly,
    decompose_s,
    decompose_trace_space,
    highest_weight_vectors,
    hilbert_series,
    lr_tensor,
    necklaces,
    relation_residual,
    run_cli,
    series_identity_holds,
    solve_xi,
    trace,
    verify_trace_expansions,
)

__all__ = [
    "PipelineError",
    "Poly",
    "decompose_s",
    "decompose_trace_space",
    "highest_weight_vectors",
    "hilbert_series",
    "lr_tensor",
    "necklaces",
    "relation_residual",
    "run_cli",
    "series_identity_holds",
    "solve_xi",
    "trace",
    "verify_trace_expansions",
]
