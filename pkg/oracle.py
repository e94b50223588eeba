"""
Exhaustive ground truth for small n: enumerate H≀T_n and count directly.

Every enumeration is guarded by a candidate budget; exceeding it raises
OracleInfeasibleError instead of truncating.
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional

from algebra_core import (
    EquationSpec,
    FiniteGroup,
    Transformation,
    WreathElement,
    is_admissible,
    power,
    wreath_mul,
)
from config import get_config_value
from error_handler import OracleInfeasibleError, PreconditionError
from enhanced_logging import get_enhanced_logger, log_performance
from index_set import IndexSet

logger = get_enhanced_logger("oracle")


def _check_budget(n: int, group: FiniteGroup, budget: Optional[int]) -> None:
    if n < 0:
        raise PreconditionError("n must be non-negative")
    budget = budget or get_config_value("oracle_budget", 10**8)
    candidates = group.order**n * n**n
    if candidates > budget:
        logger.warning("Oracle budget exceeded", n=n, group=str(group), candidates=candidates, budget=budget)
        raise OracleInfeasibleError(candidates, budget)


def _transformations(n: int, first: Optional[int] = None) -> Iterator[Transformation]:
    """All maps on [n] in lexicographic order of their images, optionally with τ(1) fixed."""
    heads = [first] if first is not None else range(1, n + 1)
    for head in heads:
        for rest in itertools.product(range(1, n + 1), repeat=n - 1):
            yield Transformation(n, (head,) + rest)


def _count_for_head(n, eq, group, lam, m, head) -> int:
    count = 0
    labelings = list(itertools.product(range(group.order), repeat=n))
    for tau in _transformations(n, head):
        if not is_admissible(tau, lam, m):
            continue
        # the τ-part of x^k is τ^k, so most maps are rejected before labelling
        if power(tau, eq.alpha) != power(tau, eq.beta):
            continue
        for labels in labelings:
            x = WreathElement(labels, tau)
            if power(x, eq.alpha, group) == power(x, eq.beta, group):
                count += 1
    return count


@log_performance("count_power_solutions")
def count_power_solutions(
    n: int,
    eq: EquationSpec,
    group: FiniteGroup,
    lam: IndexSet,
    m: IndexSet,
    budget: Optional[int] = None,
    workers: int = 1,
) -> int:
    """Number of (Λ,M)-admissible (f,τ) in H≀T_n with (f,τ)^α = (f,τ)^β."""
    _check_budget(n, group, budget)
    if n == 0:
        # the empty map has no components
        return 1 if 0 in m else 0

    heads = range(1, n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _count_for_head,
                *zip(*[(n, eq, group, lam, m, head) for head in heads]),
            )
            return sum(parts)
    return sum(_count_for_head(n, eq, group, lam, m, head) for head in heads)


@log_performance("enumerate_idempotents")
def enumerate_idempotents(n: int, group: FiniteGroup, budget: Optional[int] = None) -> List[WreathElement]:
    """All x in H≀T_n with x·x = x, ordered by (τ image, labels)."""
    _check_budget(n, group, budget)
    result = []
    labelings = list(itertools.product(range(group.order), repeat=n))
    for tau in _transformations(n) if n else [Transformation(0, ())]:
        # τ itself must be idempotent
        if tau.image != tuple(tau.image[v - 1] for v in tau.image):
            continue
        for labels in labelings:
            x = WreathElement(labels, tau)
            if wreath_mul(x, x, group) == x:
                result.append(x)
    result.sort(key=WreathElement.sort_key)
    logger.debug("Enumerated idempotents", n=n, group=str(group), count=len(result))
    return result


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.components = size

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.components -= 1


def two_colour_connected(x: Transformation, y: Transformation) -> bool:
    """Whether the union of the functional graphs of x and y is weakly connected."""
    uf = _UnionFind(x.n)
    for j in range(x.n):
        uf.union(j, x.image[j] - 1)
        uf.union(j, y.image[j] - 1)
    return uf.components == 1


@log_performance("count_commuting_idempotent_pairs")
def count_commuting_idempotent_pairs(
    n: int, group: FiniteGroup, connected_only: bool = False, budget: Optional[int] = None
) -> int:
    """Pairs (X, Y) of idempotents of H≀T_n with XY = YX, optionally two-colour connected."""
    idempotents = enumerate_idempotents(n, group, budget)
    if n == 0:
        return 0 if connected_only else 1
    count = 0
    for x in idempotents:
        for y in idempotents:
            if connected_only and not two_colour_connected(x.tau, y.tau):
                continue
            if wreath_mul(x, y, group) == wreath_mul(y, x, group):
                count += 1
    return count


def idempotent_count_direct(n: int) -> int:
    """Σ_k C(n,k)·k^(n−k) with 0^0 = 1: idempotents of T_n without enumeration."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    return sum(math.comb(n, k) * k ** (n - k) for k in range(n + 1))
