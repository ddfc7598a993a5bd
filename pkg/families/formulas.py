"""Closed forms for trees, cycles, wheels and complete graphs."""

from math import comb, isqrt
from typing import Iterator, List, Set, Tuple

from core.exceptions import FamilyError
from polynomial import Poly

# ----------------------------------------------------------------------
# Trees and cycles
# ----------------------------------------------------------------------


def tree_defect_poly(n: int, k: int) -> Poly:
    """C(n-1, k) * lambda * (lambda - 1)^(n-1-k) for any tree on n vertices."""
    if n < 1 or not 0 <= k <= n - 1:
        raise FamilyError(f"tree_defect_poly needs n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")
    return comb(n - 1, k) * (Poly.lam() * Poly.linear(1) ** (n - 1 - k))


def cycle_defect_poly(n: int, k: int) -> Poly:
    """C(n, k) * [(lambda - 1)^(n-k) + (-1)^(n-k) * (lambda - 1)]."""
    if n < 3 or not 0 <= k <= n:
        raise FamilyError(f"cycle_defect_poly needs n >= 3 and 0 <= k <= n, got n={n}, k={k}")
    shifted = Poly.linear(1)
    sign = -1 if (n - k) % 2 else 1
    return comb(n, k) * (shifted ** (n - k) + sign * shifted)


def tree_defect_number(n: int, k: int) -> int:
    if n < 2:
        raise FamilyError(f"tree_defect_number needs n >= 2, got {n}")
    if 0 <= k <= n - 2:
        return 2
    return 1 if k == n - 1 else 0


def cycle_defect_number(n: int, k: int) -> int:
    """
    Defect numbers of C_n.

    k = 0 is the chromatic number; for 1 <= k <= n-2 the answer depends on the parity
    of n - k; exactly n - 1 bad edges is impossible.
    """
    if n < 3:
        raise FamilyError(f"cycle_defect_number needs n >= 3, got {n}")
    if k == 0:
        return 2 if n % 2 == 0 else 3
    if 1 <= k <= n - 2:
        return 2 if (n - k) % 2 == 0 else 3
    return 1 if k == n else 0


# ----------------------------------------------------------------------
# Wheels (n vertices, 2n - 2 edges)
# ----------------------------------------------------------------------


def _check_wheel(n: int) -> None:
    if n <= 3:
        raise FamilyError(f"wheel needs n >= 4, got {n}")


def wheel_defect_number(n: int, k: int) -> int:
    """
    Defect numbers of W_n.

    The zero window just below k = m is {2n-4, 2n-3}: with edge connectivity 3 and
    m = 2n - 2, every m - 3 < k < m is infeasible.
    """
    _check_wheel(n)
    if k == 0:
        return 3 if n % 2 else 4
    if 1 <= k < n // 2:
        return 3
    if n // 2 <= k <= 2 * n - 5:
        return 2
    return 1 if k == 2 * n - 2 else 0


def wheel_printed_zero_interval(n: int) -> List[int]:
    """The k with 2n-3 <= k <= 2n-4 taken literally; always empty."""
    _check_wheel(n)
    return list(range(2 * n - 3, 2 * n - 4 + 1))


def wheel_zero_window(n: int) -> List[int]:
    _check_wheel(n)
    return [2 * n - 4, 2 * n - 3]


def wheel_min_bad_2col(n: int) -> int:
    """Fewest bad edges over 2-colorings of W_n."""
    _check_wheel(n)
    return n // 2


# ----------------------------------------------------------------------
# Complete graphs
# ----------------------------------------------------------------------


def kn_interval_bound(n: int) -> int:
    """Largest p in the K_n interval family: floor((-1 + sqrt(8n - 15)) / 2)."""
    return (isqrt(8 * n - 15) - 1) // 2


def kn_intervals(n: int) -> List[Tuple[int, int]]:
    """Open intervals (C(n-p,2) + C(p,2), C(n-p+1,2)) for p = 1..bound."""
    if n < 3:
        raise FamilyError(f"kn_infeasible_set needs n >= 3, got {n}")
    return [
        (comb(n - p, 2) + comb(p, 2), comb(n - p + 1, 2))
        for p in range(1, kn_interval_bound(n) + 1)
    ]


def kn_infeasible_set(n: int) -> Set[int]:
    """Integers strictly inside one of the K_n intervals."""
    return {k for low, high in kn_intervals(n) for k in range(low + 1, high)}


def integer_partitions(n: int, largest: int = 0) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into non-increasing parts."""
    if n == 0:
        yield ()
        return
    top = n if largest <= 0 else min(n, largest)
    for part in range(top, 0, -1):
        for rest in integer_partitions(n - part, part):
            yield (part,) + rest


def complete_defect_number(n: int, k: int) -> int:
    """
    phi_k(K_n) via vertex partitions.

    Every partition of V(K_n) gives a flat of size sum C(b, 2) whose contraction is a
    complete graph on one vertex per block, so phi_k(K_n) is the fewest blocks among
    partitions of n with sum C(b, 2) = k.
    """
    if n < 1:
        raise FamilyError(f"complete_defect_number needs n >= 1, got {n}")
    blocks = [len(p) for p in integer_partitions(n) if sum(comb(b, 2) for b in p) == k]
    return min(blocks, default=0)


def complete_feasible_set(n: int) -> Set[int]:
    if n < 1:
        raise FamilyError(f"complete_feasible_set needs n >= 1, got {n}")
    return {sum(comb(b, 2) for b in p) for p in integer_partitions(n)}
