"""Serializable data models (JSON schemas of the CLI and verifier) using Pydantic."""

from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, Field, field_validator

from engine import Coloring, DefectRow, DefectTable, Flat
from polynomial import Poly


class FamilyKind(str, Enum):
    """Graph family enumeration; values are the CLI spellings."""

    PATH = "path"
    STAR = "star"
    CYCLE = "cycle"
    WHEEL = "wheel"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "kbipartite"
    RANDOM_TREE = "randomtree"
    ALL_LABELED_GRAPHS = "allgraphs"
    ALL_LABELED_TREES = "alltrees"


class FamilySpec(BaseModel):
    """One family instance, e.g. ``wheel:6`` or ``kbipartite:3,4``."""

    kind: FamilyKind
    params: List[int] = Field(default_factory=list)

    @field_validator("params")
    @classmethod
    def validate_params(cls, v):
        """Parameters are non-negative integers."""
        if any(p < 0 for p in v):
            raise ValueError("family parameters must be non-negative")
        return v

    @property
    def label(self) -> str:
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"

    def __str__(self) -> str:
        return self.label


class RowModel(BaseModel):
    """One table row: coefficients low to high."""

    k: int = Field(ge=0)
    poly: List[int]
    number: int = Field(ge=0)
    feasible: bool


class TableModel(BaseModel):
    """JSON form of a defect table."""

    n: int = Field(ge=0)
    m: int = Field(ge=0)
    rows: List[RowModel]
    engines: List[str] = Field(default_factory=list)
    verified: bool = False

    @classmethod
    def from_table(cls, table: DefectTable) -> "TableModel":
        return cls(
            n=table.n,
            m=table.m,
            rows=[
                RowModel(k=r.k, poly=r.poly.to_list(), number=r.number, feasible=r.feasible)
                for r in table.rows
            ],
            engines=list(table.engines),
            verified=table.verified,
        )

    def to_table(self) -> DefectTable:
        rows = tuple(DefectRow(r.k, Poly(tuple(r.poly)), r.number) for r in self.rows)
        return DefectTable(self.n, self.m, rows, tuple(self.engines), self.verified)


class WitnessModel(BaseModel):
    """JSON form of a witness coloring."""

    k: int = Field(ge=0)
    colors: int = Field(ge=1)
    assignment: List[int]
    bad_edges: List[int]

    @classmethod
    def from_coloring(cls, k: int, coloring: Coloring) -> "WitnessModel":
        return cls(
            k=k,
            colors=coloring.colors,
            assignment=list(coloring.assignment),
            bad_edges=list(coloring.bad_edges),
        )


class FlatModel(BaseModel):
    """JSON form of a flat: edge ids and the vertex blocks of (V, X)."""

    size: int = Field(ge=0)
    edges: List[int]
    blocks: List[List[int]]

    @classmethod
    def from_flat(cls, flat: Flat) -> "FlatModel":
        return cls(size=flat.size, edges=flat.sorted_edges(), blocks=flat.partition.blocks())


class ClaimOutcome(str, Enum):
    """Claim outcome enumeration."""

    PASS = "pass"
    COUNTEREXAMPLES = "counterexamples"


class Counterexample(BaseModel):
    """A re-runnable failing instance; ``graph`` is in edge-list format."""

    graph: str
    k: Optional[int] = None
    expected: Any = None
    actual: Any = None


class ReadingReport(BaseModel):
    """Outcome of one reading of an ambiguous or corrected claim."""

    name: str
    outcome: ClaimOutcome
    checked: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)
    note: Optional[str] = None


class ClaimReport(BaseModel):
    """Verifier report for one claim over one corpus."""

    claim: str
    corpus: str
    checked: int = Field(ge=0)
    outcome: ClaimOutcome
    counterexamples: List[Counterexample] = Field(default_factory=list)
    ms: float = Field(ge=0)
    readings: List[ReadingReport] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.outcome == ClaimOutcome.PASS


class ClaimInfo(BaseModel):
    """Catalog entry for ``claims`` listings."""

    id: str
    statement: str
    check: str
    corpus: List[str]


class BenchRow(BaseModel):
    """One engine timing over one corpus."""

    engine: str
    corpus: str
    instances: int = Field(ge=0)
    seconds: float = Field(ge=0)
    cache_hits: int = Field(default=0, ge=0)
    cache_misses: int = Field(default=0, ge=0)
