"""Claim runner: evaluates a claim over a corpus and builds its report."""

import time
from concurrent.futures import ThreadPoolExecutor
from itertools import groupby
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from core.config import get_config
from core.exceptions import ClaimError
from core.logger import get_logger
from data.models import (
    ClaimInfo,
    ClaimOutcome,
    ClaimReport,
    Counterexample,
    FamilySpec,
    ReadingReport,
)
from engine import RecursionCache
from families import corpus as build_corpus
from graphs import Graph, to_edge_list

from .claims import CLAIMS, MAIN, Claim, Instance, InstanceResult, get_claim

logger = get_logger(__name__)

CorpusItem = Tuple[FamilySpec, Graph]


def corpus_order(item: CorpusItem) -> Tuple[int, int, List[Tuple[int, int]]]:
    """Fewest vertices, then fewest edges, then lexicographic edge list."""
    graph = item[1]
    return (graph.n, graph.m, graph.pairs())


def _counterexamples(
    items: Sequence[CorpusItem], results: Sequence[InstanceResult], reading: str
) -> List[Counterexample]:
    found = []
    for (_, graph), result in zip(items, results):
        for k, expected, actual in result.failures.get(reading, []):
            found.append(
                Counterexample(graph=to_edge_list(graph), k=k, expected=expected, actual=actual)
            )
    return found


def run_claim(
    claim_id: str,
    corpus: Optional[Sequence[str]] = None,
    workers: Optional[int] = None,
    stop_at_first: Optional[bool] = None,
    show_progress: Optional[bool] = None,
    seed: Optional[int] = None,
    cache: Optional[RecursionCache] = None,
) -> ClaimReport:
    """
    Check one claim on every graph of the corpus (the claim's default corpus if omitted).

    Graphs are processed in size classes of (n, m); with ``stop_at_first`` the run ends
    after the first class that produced a counterexample. Results do not depend on the
    worker count.

    Raises:
        ClaimError: for an unknown claim or a corpus with no applicable graph
        GuardError: if a corpus graph exceeds an engine guard
    """
    claim = get_claim(claim_id)
    settings = get_config().verifier
    workers = workers or settings.workers
    stop_at_first = settings.stop_at_first if stop_at_first is None else stop_at_first
    show_progress = settings.show_progress if show_progress is None else show_progress
    texts = list(corpus) if corpus else list(claim.corpus)
    cache = cache if cache is not None else RecursionCache()

    items = sorted(build_corpus(texts, seed), key=corpus_order)
    logger.info("Claim started", claim=claim.id, corpus=texts, size=len(items), workers=workers)
    started = time.perf_counter()

    def check(item: CorpusItem) -> InstanceResult:
        return claim.run(Instance(item[0], item[1], cache))

    done: List[CorpusItem] = []
    results: List[InstanceResult] = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        with tqdm(total=len(items), desc=claim.id, ncols=80, disable=not show_progress) as bar:
            for _, group in groupby(items, key=lambda item: (item[1].n, item[1].m)):
                batch = list(group)
                batch_results = list(executor.map(check, batch))
                bar.update(len(batch))
                done.extend(batch)
                results.extend(batch_results)
                if stop_at_first and any(r.failures.get(MAIN) for r in batch_results):
                    logger.info("Stopping at first failing size class", claim=claim.id)
                    break

    report = _build_report(claim, texts, done, results, started)
    logger.info(
        "Claim finished",
        claim=claim.id,
        outcome=report.outcome.value,
        checked=report.checked,
        counterexamples=len(report.counterexamples),
        ms=round(report.ms, 1),
    )
    return report


def _build_report(
    claim: Claim,
    texts: Sequence[str],
    items: Sequence[CorpusItem],
    results: Sequence[InstanceResult],
    started: float,
) -> ClaimReport:
    applicable = [(item, r) for item, r in zip(items, results) if r.applicable]
    if not applicable:
        raise ClaimError(f"corpus {', '.join(texts)} has no graph claim {claim.id} applies to")
    kept_items = [item for item, _ in applicable]
    kept_results = [r for _, r in applicable]

    counterexamples = _counterexamples(kept_items, kept_results, MAIN)
    readings = []
    for name, note in claim.readings:
        found = _counterexamples(kept_items, kept_results, name)
        readings.append(
            ReadingReport(
                name=name,
                outcome=ClaimOutcome.COUNTEREXAMPLES if found else ClaimOutcome.PASS,
                checked=len(kept_items),
                counterexamples=found,
                note=note,
            )
        )

    return ClaimReport(
        claim=claim.id,
        corpus=", ".join(texts),
        checked=len(kept_items),
        outcome=ClaimOutcome.COUNTEREXAMPLES if counterexamples else ClaimOutcome.PASS,
        counterexamples=counterexamples,
        ms=(time.perf_counter() - started) * 1000.0,
        readings=readings,
        notes=list(claim.notes),
    )


def run_claims(ids: Optional[Sequence[str]] = None, **options) -> List[ClaimReport]:
    """Run several claims (all of them by default) with their default corpora."""
    selected = list(ids) if ids else list(CLAIMS)
    return [run_claim(claim_id, **options) for claim_id in selected]


def list_claims() -> List[ClaimInfo]:
    return [
        ClaimInfo(id=c.id, statement=c.statement, check=c.check, corpus=list(c.corpus))
        for c in CLAIMS.values()
    ]


def claim_counts(reports: Sequence[ClaimReport]) -> Dict[str, int]:
    """Number of passing and failing reports."""
    passed = sum(1 for r in reports if r.passed)
    return {"pass": passed, "counterexamples": len(reports) - passed}
