"""Output rendering and benchmarking."""

from .bench import bench_frame, render_bench, run_bench
from .reporter import (
    FORMATS,
    parse_table_json,
    render_claims,
    render_flats,
    render_number,
    render_poly,
    render_reports,
    render_table,
    render_witness,
)

__all__ = [
    "FORMATS",
    "render_poly",
    "render_number",
    "render_table",
    "parse_table_json",
    "render_witness",
    "render_flats",
    "render_reports",
    "render_claims",
    "run_bench",
    "bench_frame",
    "render_bench",
]
