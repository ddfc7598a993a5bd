"""Serializable data models."""

from .models import (
    BenchRow,
    ClaimInfo,
    ClaimOutcome,
    ClaimReport,
    Counterexample,
    FamilyKind,
    FamilySpec,
    FlatModel,
    ReadingReport,
    RowModel,
    TableModel,
    WitnessModel,
)

__all__ = [
    "FamilyKind",
    "FamilySpec",
    "RowModel",
    "TableModel",
    "WitnessModel",
    "FlatModel",
    "ClaimOutcome",
    "Counterexample",
    "ReadingReport",
    "ClaimReport",
    "ClaimInfo",
    "BenchRow",
]
