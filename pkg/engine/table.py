"""Defect tables with cross-engine verification."""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from core.config import ENGINE_NAMES, get_config
from core.exceptions import EngineDisagreementError, GraphError, GuardError
from core.logger import get_logger
from graphs import Graph
from polynomial import Poly, smallest_positive_support

from .cache import RecursionCache
from .flats import defect_number_by_flats, defect_poly_flats
from .oracle import brute_force_vector, defect_vector_oracle
from .recursion import DefectVector, defect_vector_dc
from .subset import defect_vector_subset

logger = get_logger(__name__)


@dataclass(frozen=True)
class DefectRow:
    """Row k of a defect table."""

    k: int
    poly: Poly
    number: int

    @property
    def feasible(self) -> bool:
        return not self.poly.is_zero()


@dataclass(frozen=True)
class DefectTable:
    """phi_k(G; lambda) and phi_k(G) for k = 0..m."""

    n: int
    m: int
    rows: Tuple[DefectRow, ...]
    engines: Tuple[str, ...] = ("dc",)
    verified: bool = False

    def polys(self) -> List[Poly]:
        return [row.poly for row in self.rows]

    def numbers(self) -> List[int]:
        return [row.number for row in self.rows]

    def feasible_set(self) -> Set[int]:
        return {row.k for row in self.rows if row.feasible}

    def total(self) -> Poly:
        result = Poly.zero()
        for row in self.rows:
            result = result + row.poly
        return result

    def same_values(self, other: "DefectTable") -> bool:
        """Equality of the mathematical content, ignoring the engine bookkeeping."""
        return (self.n, self.m, self.rows) == (other.n, other.m, other.rows)


def defect_vector(
    graph: Graph, engine: str = "dc", cache: Optional[RecursionCache] = None
) -> DefectVector:
    """
    phi_0..phi_m computed by one named engine.

    Raises:
        GraphError: for an unknown engine name
    """
    if engine == "dc":
        return defect_vector_dc(graph, cache)
    if engine == "subset":
        return defect_vector_subset(graph)
    if engine == "flats":
        shared = cache if cache is not None else RecursionCache()
        return tuple(defect_poly_flats(graph, k, shared) for k in range(graph.m + 1))
    if engine == "oracle":
        return defect_vector_oracle(graph)
    raise GraphError(f"unknown engine {engine!r}; expected one of {', '.join(ENGINE_NAMES)}")


def number_from_poly(graph: Graph, k: int, poly: Poly) -> int:
    """phi_k(G) from phi_k(G; lambda)."""
    if k > graph.m:
        return 0
    if k == graph.m and graph.m >= 1:
        return 1
    return smallest_positive_support(poly, max(graph.n, 1))


def defect_number(
    graph: Graph, k: int, cache: Optional[RecursionCache] = None, engine: str = "dc"
) -> int:
    """
    The k-defect number: least color count admitting exactly k bad edges, 0 if none.

    Raises:
        GraphError: if k is negative or the engine is unknown
    """
    if k < 0:
        raise GraphError(f"k must be non-negative, got {k}")
    if k > graph.m:
        return 0
    vector = defect_vector(graph, engine, cache)
    return number_from_poly(graph, k, vector[k])


def _compare_vectors(
    graph: Graph, first: str, second: str, left: Sequence[Poly], right: Sequence[Poly]
) -> None:
    for k, (a, b) in enumerate(zip(left, right)):
        if a != b:
            logger.error("Engines disagree", first=first, second=second, k=k, graph=repr(graph))
            raise EngineDisagreementError(first, second, k, a.to_list(), b.to_list())
    if len(left) != len(right):
        raise EngineDisagreementError(first, second, None, len(left), len(right))


def _check_oracle(graph: Graph, reference: Sequence[Poly], lambdas: Sequence[int]) -> bool:
    """Compare evaluations against enumerated counts; False when every lambda is guarded out."""
    checked = False
    for lam in lambdas:
        try:
            counts = brute_force_vector(graph, lam)
        except GuardError:
            continue
        checked = True
        expected = [poly.eval(lam) for poly in reference]
        if expected != counts:
            k = next(i for i, (a, b) in enumerate(zip(expected, counts)) if a != b)
            logger.error("Oracle disagrees", lam=lam, k=k, graph=repr(graph))
            raise EngineDisagreementError("dc", f"oracle@{lam}", k, expected[k], counts[k])
    return checked


def defect_table(
    graph: Graph,
    engines: Optional[Sequence[str]] = None,
    cache: Optional[RecursionCache] = None,
) -> DefectTable:
    """
    Full defect table, cross-checked by every requested engine that fits its size guard.

    The first engine in ``engines`` is the reference. ``oracle`` is checked at the configured
    lambda values rather than by full interpolation. Engines skipped by a guard are logged
    and left out of ``engines`` on the result.

    Raises:
        EngineDisagreementError: if two engines disagree or the rows do not sum to lambda^n
    """
    limits = get_config().engine
    requested = list(engines) if engines else list(limits.default_engines)
    for name in requested:
        if name not in ENGINE_NAMES:
            raise GraphError(f"unknown engine {name!r}; expected one of {', '.join(ENGINE_NAMES)}")
    cache = cache if cache is not None else RecursionCache()

    reference_name = requested[0]
    reference = defect_vector(graph, reference_name, cache)
    ran = [reference_name]

    runners: Dict[str, Callable[[], DefectVector]] = {
        "dc": lambda: defect_vector_dc(graph, cache),
        "subset": lambda: defect_vector_subset(graph),
        "flats": lambda: defect_vector(graph, "flats", cache),
    }
    for name in requested[1:]:
        if name == "oracle":
            if _check_oracle(graph, reference, limits.oracle_lambdas):
                ran.append(name)
            else:
                logger.info("Engine skipped by guard", engine=name, n=graph.n)
            continue
        try:
            other = runners[name]()
        except GuardError as e:
            logger.info("Engine skipped by guard", engine=name, guard=e.name)
            continue
        _compare_vectors(graph, reference_name, name, reference, other)
        ran.append(name)

    total = Poly.zero()
    for poly in reference:
        total = total + poly
    if total != Poly.monomial(graph.n):
        raise EngineDisagreementError(
            reference_name, "normalization", None, Poly.monomial(graph.n).to_list(), total.to_list()
        )

    rows = tuple(
        DefectRow(k, poly, number_from_poly(graph, k, poly)) for k, poly in enumerate(reference)
    )
    if "flats" in ran:
        for row in rows:
            by_flats = defect_number_by_flats(graph, row.k, cache)
            if by_flats != row.number:
                raise EngineDisagreementError(
                    reference_name, "flats-minimum", row.k, row.number, by_flats
                )

    logger.debug("Defect table computed", n=graph.n, m=graph.m, engines=ran, **cache.stats())
    return DefectTable(graph.n, graph.m, rows, tuple(ran), len(ran) > 1)
