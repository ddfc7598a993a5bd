"""
Claim catalog.

Every claim has a checker that inspects one corpus graph and records failures per reading.
The reading named ``main`` decides the claim outcome; any other reading is reported
alongside it (ambiguous statements, corrected variants).
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple

from core.exceptions import ClaimError, PolynomialError
from data.models import FamilyKind, FamilySpec
from engine import (
    RecursionCache,
    all_flats,
    chromatic_poly,
    defect_number_by_flats,
    defect_vector_dc,
    feasible_k,
    min_bad_edges,
    number_from_poly,
)
from families import (
    complete_defect_number,
    cycle_defect_number,
    cycle_defect_poly,
    independent_degree_sums,
    kn_infeasible_set,
    tree_defect_number,
    tree_defect_poly,
    two_color_bad_spectrum,
    wheel_defect_number,
    wheel_min_bad_2col,
    wheel_printed_zero_interval,
    wheel_zero_window,
)
from graphs import (
    Graph,
    clique_number,
    components,
    contract_set,
    edge_connectivity,
    is_bipartite,
    is_connected,
    to_edge_list,
)
from graphs.graph import induced_subgraph, remove_edges
from polynomial import Poly, falling_prefix, positive_integer_roots, smallest_positive_support

MAIN = "main"

Failure = Tuple[Optional[int], Any, Any]


@dataclass
class InstanceResult:
    """Failures per reading for one corpus graph; ``applicable`` False skips the graph."""

    applicable: bool = True
    failures: Dict[str, List[Failure]] = field(default_factory=dict)

    def fail(self, reading: str, k: Optional[int], expected: Any, actual: Any) -> None:
        self.failures.setdefault(reading, []).append((k, expected, actual))


NOT_APPLICABLE = InstanceResult(applicable=False)


class Instance:
    """One corpus graph with lazily computed defect data shared by a checker."""

    def __init__(self, spec: FamilySpec, graph: Graph, cache: RecursionCache):
        self.spec = spec
        self.graph = graph
        self.cache = cache

    @cached_property
    def vector(self) -> Tuple[Poly, ...]:
        return defect_vector_dc(self.graph, self.cache)

    @cached_property
    def numbers(self) -> List[int]:
        return [number_from_poly(self.graph, k, p) for k, p in enumerate(self.vector)]

    def numbers_of(self, graph: Graph) -> List[int]:
        vector = defect_vector_dc(graph, self.cache)
        return [number_from_poly(graph, k, p) for k, p in enumerate(vector)]

    def chromatic_number(self, graph: Graph) -> int:
        return smallest_positive_support(chromatic_poly(graph, self.cache), max(graph.n, 1))


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    check: str
    corpus: Tuple[str, ...]
    run: Callable[[Instance], InstanceResult]
    readings: Tuple[Tuple[str, str], ...] = ()
    notes: Tuple[str, ...] = ()


# ----------------------------------------------------------------------
# Checkers
# ----------------------------------------------------------------------


def _partition_identity(inst: Instance) -> InstanceResult:
    result = InstanceResult()
    total = Poly.zero()
    for poly in inst.vector:
        total = total + poly
    expected = Poly.monomial(inst.graph.n)
    if total != expected:
        result.fail(MAIN, None, expected.to_list(), total.to_list())
    return result


def _slice_zero_is_chromatic(inst: Instance) -> InstanceResult:
    result = InstanceResult()
    chi = chromatic_poly(inst.graph, inst.cache)
    if inst.vector[0] != chi:
        result.fail(MAIN, 0, chi.to_list(), inst.vector[0].to_list())
    return result


def _subgraph_monotone(inst: Instance) -> InstanceResult:
    """phi_k(H) <= phi_k(G) for spanning and induced subgraphs H, 0 <= k <= m."""
    graph = inst.graph
    result = InstanceResult()
    subgraphs: List[Graph] = []
    for size in range(graph.m):
        for removed in combinations(range(graph.m), graph.m - size):
            subgraphs.append(remove_edges(graph, removed))
    for size in range(1, graph.n):
        for vertices in combinations(range(graph.n), size):
            subgraphs.append(induced_subgraph(graph, vertices))

    bound = inst.numbers
    for sub in subgraphs:
        sub_numbers = inst.numbers_of(sub)
        for k in range(graph.m + 1):
            value = sub_numbers[k] if k <= sub.m else 0
            if value > bound[k]:
                record = {"subgraph": to_edge_list(sub), "number": value}
                result.fail(MAIN, k, {"max": bound[k]}, record)
                if value and bound[k]:
                    result.fail("both-feasible", k, {"max": bound[k]}, record)
    return result


def _top_row(inst: Instance) -> InstanceResult:
    graph = inst.graph
    if graph.m == 0:
        return NOT_APPLICABLE
    result = InstanceResult()
    if inst.numbers[graph.m] != 1:
        result.fail(MAIN, graph.m, 1, inst.numbers[graph.m])
    expected = Poly.monomial(components(graph).count)
    if inst.vector[graph.m] != expected:
        actual = inst.vector[graph.m].to_list()
        result.fail("top-row-polynomial", graph.m, expected.to_list(), actual)
    return result


def _one_color_only_at_top(inst: Instance) -> InstanceResult:
    result = InstanceResult()
    for k, number in enumerate(inst.numbers):
        if (number == 1) != (k == inst.graph.m):
            result.fail(MAIN, k, 1 if k == inst.graph.m else "not 1", number)
    return result


def _flat_minimum(inst: Instance) -> InstanceResult:
    result = InstanceResult()
    for k, number in enumerate(inst.numbers):
        by_flats = defect_number_by_flats(inst.graph, k, inst.cache)
        if number != by_flats:
            result.fail(MAIN, k, by_flats, number)
    return result


def _minor_minimum_readings(inst: Instance) -> InstanceResult:
    """Minimum over size-k flats of chi(G/X) and, separately, of omega(G/X)."""
    result = InstanceResult()
    chi_best: Dict[int, int] = {}
    omega_best: Dict[int, int] = {}
    for flat in all_flats(inst.graph):
        minor = contract_set(inst.graph, flat.edges)
        chi = inst.chromatic_number(minor)
        omega = clique_number(minor)
        chi_best[flat.size] = min(chi, chi_best.get(flat.size, chi))
        omega_best[flat.size] = min(omega, omega_best.get(flat.size, omega))
    for k, number in enumerate(inst.numbers):
        if number != chi_best.get(k, 0):
            result.fail(MAIN, k, chi_best.get(k, 0), number)
            result.fail("chromatic", k, chi_best.get(k, 0), number)
        if number != omega_best.get(k, 0):
            result.fail("clique", k, omega_best.get(k, 0), number)
    return result


def _connectivity_window(inst: Instance) -> InstanceResult:
    graph = inst.graph
    if graph.n < 2 or not is_connected(graph):
        return NOT_APPLICABLE
    result = InstanceResult()
    cut = edge_connectivity(graph)
    for k in range(graph.m - cut + 1, graph.m):
        if inst.numbers[k] != 0:
            result.fail(MAIN, k, 0, inst.numbers[k])
    return result


def _family_formulas(inst: Instance) -> InstanceResult:
    kind = inst.spec.kind
    graph = inst.graph
    result = InstanceResult()
    numbers = inst.numbers

    if kind == FamilyKind.WHEEL:
        n = graph.n
        for k in range(graph.m + 1):
            expected = wheel_defect_number(n, k)
            if numbers[k] != expected:
                result.fail(MAIN, k, expected, numbers[k])
        two = min_bad_edges(graph, 2)
        if two != wheel_min_bad_2col(n):
            result.fail(MAIN, None, {"min_bad_2col": wheel_min_bad_2col(n)}, {"min_bad_2col": two})
        printed = set(wheel_printed_zero_interval(n))
        for k in wheel_zero_window(n):
            if numbers[k] == 0 and k not in printed:
                result.fail("printed-zero-interval", k, "covered by 2n-3 <= k <= 2n-4", 0)
        return result

    if kind == FamilyKind.CYCLE:
        n = graph.n
        for k in range(graph.m + 1):
            if numbers[k] != cycle_defect_number(n, k):
                result.fail(MAIN, k, cycle_defect_number(n, k), numbers[k])
            formula = cycle_defect_poly(n, k)
            if inst.vector[k] != formula:
                result.fail(MAIN, k, formula.to_list(), inst.vector[k].to_list())
        return result

    tree_kinds = (
        FamilyKind.ALL_LABELED_TREES,
        FamilyKind.RANDOM_TREE,
        FamilyKind.PATH,
        FamilyKind.STAR,
    )
    if kind in tree_kinds and graph.n >= 2:
        n = graph.n
        for k in range(graph.m + 1):
            if numbers[k] != tree_defect_number(n, k):
                result.fail(MAIN, k, tree_defect_number(n, k), numbers[k])
            formula = tree_defect_poly(n, k)
            if inst.vector[k] != formula:
                result.fail(MAIN, k, formula.to_list(), inst.vector[k].to_list())
        return result

    if kind == FamilyKind.COMPLETE:
        for k in range(graph.m + 1):
            expected = complete_defect_number(graph.n, k)
            if numbers[k] != expected:
                result.fail(MAIN, k, expected, numbers[k])
        return result

    return NOT_APPLICABLE


def _feasible_iff_flat(inst: Instance) -> InstanceResult:
    result = InstanceResult()
    flats = feasible_k(inst.graph)
    for k, poly in enumerate(inst.vector):
        has_flat = k in flats
        if has_flat == poly.is_zero() or has_flat != (inst.numbers[k] >= 1):
            result.fail(MAIN, k, {"flat": has_flat}, {"feasible": not poly.is_zero()})
    return result


def _minor_chromatic_facts(inst: Instance) -> InstanceResult:
    """chi >= omega and (chi = 2 iff bipartite) on every flat contraction."""
    result = InstanceResult()
    for flat in all_flats(inst.graph):
        minor = contract_set(inst.graph, flat.edges)
        chi = inst.chromatic_number(minor)
        omega = clique_number(minor)
        if chi < omega:
            result.fail(MAIN, flat.size, {"omega": omega}, {"chi": chi})
        if minor.m and (chi == 2) != (is_bipartite(minor) is not None):
            bipartite = is_bipartite(minor) is not None
            result.fail(MAIN, flat.size, {"bipartite": bipartite}, {"chi": chi})
    return result


def _complete_intervals(inst: Instance) -> InstanceResult:
    if inst.spec.kind != FamilyKind.COMPLETE or inst.graph.n < 3:
        return NOT_APPLICABLE
    graph = inst.graph
    result = InstanceResult()
    formula = kn_infeasible_set(graph.n)
    feasible = feasible_k(graph)
    for k in sorted(formula):
        if k in feasible:
            result.fail(MAIN, k, "infeasible", "feasible")
    for k in range(graph.m + 1):
        if (k in formula) != (k not in feasible):
            expected = {"in_formula": k in formula}
            result.fail("equality", k, expected, {"infeasible": k not in feasible})
        by_partitions = complete_defect_number(graph.n, k)
        by_flats = defect_number_by_flats(graph, k, inst.cache)
        if by_partitions != by_flats:
            result.fail("partition-blocks", k, by_partitions, by_flats)
    return result


def _bipartite_two_colorings(inst: Instance) -> InstanceResult:
    graph = inst.graph
    if graph.m < 2 or not is_connected(graph) or is_bipartite(graph) is None:
        return NOT_APPLICABLE
    result = InstanceResult()
    sums = independent_degree_sums(graph)
    spectrum = two_color_bad_spectrum(graph)
    for k in range(1, graph.m):
        # phi_k(G) = 2 exactly when some 2-coloring has k bad edges, for 1 <= k <= m-1
        if (k in spectrum) != (k in sums):
            result.fail(MAIN, k, {"degree_sum": k in sums}, {"two_colorable": k in spectrum})
        if k in sums and k not in spectrum:
            result.fail("degree-sum-implies-two-colors", k, 2, "more than 2")
    return result


def _root_free_quotient(inst: Instance) -> InstanceResult:
    chi = chromatic_poly(inst.graph, inst.cache)
    if chi.is_zero():
        return NOT_APPLICABLE
    prefix = falling_prefix(chi)
    if prefix.product() != chi:
        raise PolynomialError("falling prefix does not reproduce the chromatic polynomial")
    roots = positive_integer_roots(prefix.quotient)
    result = InstanceResult()
    if roots:
        result.fail(MAIN, None, {"r": prefix.r, "roots": []}, {"r": prefix.r, "roots": roots})
    return result


# ----------------------------------------------------------------------
# Catalog
# ----------------------------------------------------------------------

_SMALL = ("allgraphs:5",)

CLAIMS: Dict[str, Claim] = {
    claim.id: claim
    for claim in (
        Claim("C1", "sum_k phi_k(G; lambda) = lambda^n", "coefficientwise partition identity",
              _SMALL, _partition_identity),
        Claim("C2", "phi_0(G; lambda) = chi(G; lambda)", "slice 0 equals the chromatic polynomial",
              _SMALL, _slice_zero_is_chromatic),
        Claim("C3", "phi_k(H) <= phi_k(G) for subgraphs H and 0 <= k <= |E(G)|",
              "spanning and induced subgraphs, 0 for infeasible", ("allgraphs:4",),
              _subgraph_monotone,
              readings=(("both-feasible", "only k feasible for both graphs"),)),
        Claim("C4", "phi_m(G) = 1", "last table row", _SMALL, _top_row,
              readings=(("top-row-polynomial", "phi_m(G; lambda) = lambda^c"),)),
        Claim("C5", "phi_k(G) = 1 iff k = m", "one color forces every edge bad", _SMALL,
              _one_color_only_at_top),
        Claim("C6", "phi_k(G) = min chi(G/X) over flats X of size k",
              "engine numbers against flat contractions", _SMALL, _flat_minimum),
        Claim("C7", "phi_k(G) = min over minors G/H_i of size-k flats",
              "reported with chi and with omega as the minimized quantity", _SMALL,
              _minor_minimum_readings,
              readings=(("chromatic", "minimum of chi(G/H_i)"),
                        ("clique", "minimum of omega(G/H_i)"))),
        Claim("C8", "phi_k(G) = 0 for |E| - lambda' < k < |E|",
              "edge-connectivity window on connected graphs", _SMALL, _connectivity_window),
        Claim("C9", "closed forms for cycles, trees and wheels",
              "family formulas against the engine", ("wheel:4..8", "cycle:3..10", "alltrees:2..7"),
              _family_formulas,
              readings=(("printed-zero-interval",
                         "zero case taken as printed, 2n-3 <= k <= 2n-4"),),
              notes=("the printed wheel zero interval 2n-3 <= k <= 2n-4 is empty for every n; "
                     "the main reading uses the window {2n-4, 2n-3}",)),
        Claim("C10", "phi_k(G; lambda) = 0 iff no flat of size k", "feasibility against flats",
              _SMALL, _feasible_iff_flat),
        Claim("C11", "chi >= omega, and chi = 2 iff bipartite",
              "on every flat contraction", _SMALL, _minor_chromatic_facts),
        Claim("C12", "phi_k(K_n) = 0 on the interval family",
              "interval formula against flats of K_n", ("complete:4..7",), _complete_intervals,
              readings=(("equality", "the intervals give every infeasible k"),
                        ("partition-blocks", "phi_k(K_n) = fewest blocks of a partition"))),
        Claim("C13", "phi_k(G) = 2 iff k is an independent degree sum (bipartite G)",
              "per-k equivalence for 1 <= k <= m-1 on connected bipartite graphs",
              ("allgraphs:6",), _bipartite_two_colorings,
              readings=(("degree-sum-implies-two-colors", "one direction only"),)),
        Claim("C14", "chi(G; lambda) = lambda(lambda-1)...(lambda-r) Q(lambda), Q without "
              "positive integer roots", "root scan of the quotient",
              ("allgraphs:5", "alltrees:3..7"), _root_free_quotient),
    )
}


def get_claim(claim_id: str) -> Claim:
    """
    Raises:
        ClaimError: for an unknown id
    """
    key = claim_id.strip().upper()
    if key not in CLAIMS:
        raise ClaimError(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}")
    return CLAIMS[key]


def default_corpus(claim_id: str) -> List[str]:
    return list(get_claim(claim_id).corpus)
