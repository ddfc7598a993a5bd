"""Exact integer polynomial arithmetic."""

from .poly import (
    FallingPrefix,
    Poly,
    add,
    divide_linear,
    evaluate,
    falling_factorial,
    falling_prefix,
    from_coefficients,
    interpolate,
    mul,
    positive_integer_roots,
    scale,
    smallest_positive_support,
    sub,
)

__all__ = [
    "Poly",
    "FallingPrefix",
    "add",
    "sub",
    "mul",
    "scale",
    "evaluate",
    "falling_factorial",
    "falling_prefix",
    "divide_linear",
    "from_coefficients",
    "interpolate",
    "positive_integer_roots",
    "smallest_positive_support",
]
