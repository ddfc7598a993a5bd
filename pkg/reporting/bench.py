"""Engine timing over a corpus."""

import time
from typing import List, Optional, Sequence

import pandas as pd

from core.config import ENGINE_NAMES
from core.exceptions import ValidationError
from core.logger import get_logger
from data.models import BenchRow
from engine import RecursionCache, defect_vector
from families import corpus

logger = get_logger(__name__)


def run_bench(
    families: Sequence[str],
    engines: Sequence[str],
    cache_enabled: Optional[bool] = None,
    seed: Optional[int] = None,
) -> List[BenchRow]:
    """
    Time each engine over every graph of the corpus.

    Each engine gets a fresh memo cache so hit counts are per engine. Guard violations
    propagate.
    """
    unknown = [e for e in engines if e not in ENGINE_NAMES]
    if unknown:
        raise ValidationError(f"unknown engines {unknown}; expected {', '.join(ENGINE_NAMES)}")
    graphs = [graph for _, graph in corpus(families, seed)]
    label = ", ".join(families)

    rows = []
    for engine in engines:
        cache = RecursionCache(cache_enabled)
        started = time.perf_counter()
        for graph in graphs:
            defect_vector(graph, engine, cache)
        elapsed = time.perf_counter() - started
        rows.append(
            BenchRow(
                engine=engine,
                corpus=label,
                instances=len(graphs),
                seconds=elapsed,
                cache_hits=cache.hits,
                cache_misses=cache.misses,
            )
        )
        logger.info("Engine timed", engine=engine, instances=len(graphs), seconds=round(elapsed, 4))
    return rows


def bench_frame(rows: Sequence[BenchRow]) -> pd.DataFrame:
    columns = list(BenchRow.model_fields)
    return pd.DataFrame([row.model_dump() for row in rows], columns=columns)


def render_bench(rows: Sequence[BenchRow]) -> str:
    return bench_frame(rows).to_csv(index=False, lineterminator="\n")
