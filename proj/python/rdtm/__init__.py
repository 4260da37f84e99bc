"""Reduced differential transform series for Kuramoto-Sivashinsky problems."""

from ._core import (
    EngineError,
    ErrorRow,
    EvalError,
    Expr,
    KsParams,
    LinearTerm,
    NonlinearTerm,
    ParseError,
    PdeModel,
    SpectrumSeries,
    build_series,
    compare_table,
    generalized_model,
    ks_exact,
    ks_initial,
    ks_model,
    ks_printed_model,
    parse,
    residual_slope,
)

__all__ = [
    "EngineError",
    "ErrorRow",
    "EvalError",
    "Expr",
    "KsParams",
    "LinearTerm",
    "NonlinearTerm",
    "ParseError",
    "PdeModel",
    "SpectrumSeries",
    "build_series",
    "compare_table",
    "generalized_model",
    "ks_exact",
    "ks_initial",
    "ks_model",
    "ks_printed_model",
    "parse",
    "residual_slope",
]
