"""Renders engine results and verifier reports as JSON, CSV, LaTeX or text."""

import io
import json
from typing import Any, List, Optional, Sequence

import pandas as pd
from rich.console import Console
from rich.table import Table

from core.exceptions import ValidationError
from core.logger import get_logger
from data.models import ClaimInfo, ClaimReport, FlatModel, TableModel, WitnessModel
from engine import Coloring, DefectTable, Flat
from polynomial import Poly

logger = get_logger(__name__)

FORMATS = ("json", "csv", "latex", "text")


def _require(fmt: str, allowed: Sequence[str], what: str) -> None:
    if fmt not in allowed:
        raise ValidationError(f"format {fmt!r} not available for {what}; use {', '.join(allowed)}")


def _csv(rows: List[dict], columns: Sequence[str]) -> str:
    frame = pd.DataFrame(rows, columns=list(columns))
    return frame.to_csv(index=False, lineterminator="\n")


def render_poly(poly: Poly, k: int, fmt: str = "json") -> str:
    _require(fmt, ("json", "csv", "latex"), "poly")
    if fmt == "latex":
        return poly.to_latex()
    if fmt == "csv":
        return _csv([{"k": k, "poly": json.dumps(poly.to_list())}], ["k", "poly"])
    return json.dumps(poly.to_list())


def render_number(number: int, k: int, fmt: str = "json") -> str:
    _require(fmt, ("json", "csv", "latex"), "number")
    if fmt == "csv":
        return _csv([{"k": k, "number": number}], ["k", "number"])
    return json.dumps(number) if fmt == "json" else str(number)


def render_table(table: DefectTable, fmt: str = "json") -> str:
    """
    Render a defect table.

    JSON follows TableModel; CSV has one row per k with the coefficient list (low to
    high) as a JSON array; LaTeX is a tabular environment.
    """
    _require(fmt, ("json", "csv", "latex"), "table")
    if fmt == "json":
        return TableModel.from_table(table).model_dump_json()
    if fmt == "csv":
        rows = [
            {
                "k": r.k,
                "number": r.number,
                "feasible": r.feasible,
                "poly": json.dumps(r.poly.to_list()),
            }
            for r in table.rows
        ]
        return _csv(rows, ["k", "number", "feasible", "poly"])

    lines = [
        "\\begin{tabular}{rlr}",
        "$k$ & $\\phi_k(G;\\lambda)$ & $\\phi_k(G)$ \\\\",
        "\\hline",
    ]
    lines.extend(f"{r.k} & ${r.poly.to_latex()}$ & {r.number} \\\\" for r in table.rows)
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def parse_table_json(text: str) -> DefectTable:
    """Inverse of render_table(..., "json")."""
    return TableModel.model_validate_json(text).to_table()


def render_witness(coloring: Optional[Coloring], k: int, fmt: str = "json") -> str:
    _require(fmt, ("json", "csv"), "witness")
    if coloring is None:
        return "null" if fmt == "json" else _csv([], ["vertex", "color"])
    if fmt == "csv":
        return _csv(
            [{"vertex": v, "color": c} for v, c in enumerate(coloring.assignment)],
            ["vertex", "color"],
        )
    return WitnessModel.from_coloring(k, coloring).model_dump_json()


def render_flats(flats: Sequence[Flat], fmt: str = "json") -> str:
    _require(fmt, ("json", "csv"), "flats")
    models = [FlatModel.from_flat(f) for f in flats]
    if fmt == "csv":
        rows = [
            {"size": m.size, "edges": json.dumps(m.edges), "blocks": json.dumps(m.blocks)}
            for m in models
        ]
        return _csv(rows, ["size", "edges", "blocks"])
    return json.dumps([m.model_dump() for m in models])


def render_reports(reports: Sequence[ClaimReport], fmt: str = "json") -> str:
    _require(fmt, ("json", "csv", "text"), "verify")
    if fmt == "json":
        payload: Any = [r.model_dump(mode="json") for r in reports]
        return json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    if fmt == "csv":
        rows = [
            {
                "claim": r.claim,
                "corpus": r.corpus,
                "checked": r.checked,
                "outcome": r.outcome.value,
                "counterexamples": len(r.counterexamples),
                "ms": round(r.ms, 3),
            }
            for r in reports
        ]
        return _csv(rows, ["claim", "corpus", "checked", "outcome", "counterexamples", "ms"])

    table = Table(title="Claim reports")
    for column in ("Claim", "Corpus", "Checked", "Outcome", "Counterexamples", "Readings"):
        table.add_column(column)
    for r in reports:
        readings = ", ".join(f"{x.name}: {x.outcome.value}" for x in r.readings)
        outcome = "[green]pass[/green]" if r.passed else "[red]counterexamples[/red]"
        table.add_row(
            r.claim, r.corpus, str(r.checked), outcome, str(len(r.counterexamples)), readings
        )
    return _print_rich(table)


def render_claims(claims: Sequence[ClaimInfo], fmt: str = "text") -> str:
    _require(fmt, ("json", "text"), "claims")
    if fmt == "json":
        return json.dumps([c.model_dump() for c in claims], indent=2)
    table = Table(title=f"{len(claims)} claims")
    for column in ("Id", "Statement", "Check", "Default corpus"):
        table.add_column(column)
    for c in claims:
        table.add_row(c.id, c.statement, c.check, ", ".join(c.corpus))
    return _print_rich(table)


def _print_rich(table: Table) -> str:
    buffer = io.StringIO()
    Console(file=buffer, width=120, color_system=None).print(table)
    return buffer.getvalue().rstrip("\n")
