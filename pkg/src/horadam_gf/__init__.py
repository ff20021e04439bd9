"""Exact generating functions for k-th powers of Horadam sequences."""

from .gfengine import (
    GfResult,
    PolyMatrix,
    build_delta,
    build_delta_hat,
    determinant,
    eval_at,
    horadam_gf,
    series_coeffs,
)
from .horadam import HoradamParams, horadam_seq, mixed_series_oracle, power_series_oracle, preset
from .kernels import IMPL as KERNEL_IMPL
from .polyring import Polynomial, RationalFunction, parse_poly, ratfun_reduce

__all__ = [
    "GfResult",
    "HoradamParams",
    "KERNEL_IMPL",
    "PolyMatrix",
    "Polynomial",
    "RationalFunction",
    "build_delta",
    "build_delta_hat",
    "determinant",
    "eval_at",
    "horadam_gf",
    "horadam_seq",
    "mixed_series_oracle",
    "parse_poly",
    "power_series_oracle",
    "preset",
    "ratfun_reduce",
    "series_coeffs",
]
