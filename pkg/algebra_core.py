"""
Finite groups given by Cayley tables, transformations of [n] = {1, ..., n},
the wreath product H≀T_n and the component structure of functional graphs.

Multiplication follows the left-to-right convention (τ₁·τ₂)(j) = τ₂(τ₁(j)),
and in H≀T_n the labels multiply as f(j) = f₁(j)·f₂(τ₁(j)).
"""

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from error_handler import DimensionError, GroupValidationError, PreconditionError
from enhanced_logging import get_enhanced_logger
from index_set import IndexSet

logger = get_enhanced_logger("algebra_core")


# ---------- FINITE GROUPS ----------
@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on the indices 0..m−1; index 0 is the identity."""

    order: int
    table: Tuple[Tuple[int, ...], ...]
    name: str = "H"

    def __post_init__(self):
        _validate_cayley_table(self.order, self.table)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def pow(self, x: int, k: int) -> int:
        """x^k by repeated squaring (k >= 0)."""
        result, base = 0, x
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def __str__(self) -> str:
        return f"{self.name} (order {self.order})"


def _validate_cayley_table(order: int, table: Sequence[Sequence[int]]) -> None:
    if order < 1:
        raise GroupValidationError("group order must be positive", law="format")
    if len(table) != order or any(len(row) != order for row in table):
        raise GroupValidationError(f"table must be {order}x{order}", law="format")
    elements = range(order)
    for row in table:
        if any(not 0 <= v < order for v in row):
            raise GroupValidationError(f"entries must lie in 0..{order - 1}", law="format")

    for x in elements:
        if table[0][x] != x or table[x][0] != x:
            raise GroupValidationError(f"index 0 is not a two-sided unit at element {x}", law="identity")

    full = set(elements)
    for x in elements:
        if set(table[x]) != full:
            raise GroupValidationError(f"row {x} is not a permutation", law="invertibility")
        if {table[y][x] for y in elements} != full:
            raise GroupValidationError(f"column {x} is not a permutation", law="invertibility")

    for x in elements:
        for y in elements:
            xy = table[x][y]
            for z in elements:
                if table[xy][z] != table[x][table[y][z]]:
                    raise GroupValidationError(f"({x}*{y})*{z} != {x}*({y}*{z})", law="associativity")


def trivial_group() -> FiniteGroup:
    return FiniteGroup(1, ((0,),), "1")


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise PreconditionError("cyclic group order must be positive")
    if m == 1:
        return trivial_group()
    table = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    return FiniteGroup(m, table, f"C{m}")


def symmetric_group(m: int) -> FiniteGroup:
    """S_m with elements in lexicographic one-line order (identity first)."""
    if m < 1:
        raise PreconditionError("symmetric group degree must be positive")
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    # p·q acts as "first p, then q", matching the transformation convention
    table = tuple(
        tuple(index[tuple(q[p[k]] for k in range(m))] for q in perms) for p in perms
    )
    return FiniteGroup(len(perms), table, f"S{m}")


def load_group_table(path: Union[str, Path], name: str = None) -> FiniteGroup:
    """
    Read a Cayley table file: line 1 holds m, then m lines of m integers
    (row i, column j holds i·j). Blank lines are not allowed.
    """
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise GroupValidationError(f"{path} is empty", law="format")
    try:
        order = int(lines[0].strip())
    except ValueError:
        raise GroupValidationError(f"first line of {path} must be the group order", law="format")
    rows = lines[1:]
    while rows and not rows[-1].strip():
        rows.pop()
    if len(rows) != order:
        raise GroupValidationError(f"expected {order} table rows, found {len(rows)}", law="format")
    table = []
    for lineno, line in enumerate(rows, start=2):
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise GroupValidationError(f"line {lineno}: non-integer entry", law="format")
        table.append(row)
    group = FiniteGroup(order, tuple(table), name or path.stem)
    logger.debug("Loaded group table", path=str(path), order=order)
    return group


def iota(group: FiniteGroup, m: int) -> int:
    """Number of x in the group with x^m = 1."""
    if m < 1:
        raise PreconditionError("iota needs m >= 1")
    return sum(1 for x in range(group.order) if group.pow(x, m) == 0)


# ---------- TRANSFORMATIONS ----------
@dataclass(frozen=True)
class Transformation:
    """A map τ: [n] → [n] stored as its one-line image (image[j-1] = τ(j))."""

    n: int
    image: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.image) != self.n:
            raise DimensionError(f"image length {len(self.image)} does not match n={self.n}")
        if any(not 1 <= v <= self.n for v in self.image):
            raise PreconditionError(f"entries of a transformation on [{self.n}] must lie in 1..{self.n}")

    @classmethod
    def of(cls, image: Sequence[int]) -> "Transformation":
        return cls(len(image), tuple(image))

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, j: int) -> int:
        return self.image[j - 1]


def compose(a: Transformation, b: Transformation) -> Transformation:
    """a·b, i.e. j ↦ b(a(j))."""
    if a.n != b.n:
        raise DimensionError(f"cannot compose maps on [{a.n}] and [{b.n}]")
    return Transformation(a.n, tuple(b.image[v - 1] for v in a.image))


@dataclass(frozen=True)
class WreathElement:
    """(f, τ) in H≀T_n; labels[j-1] = f(j) as a group index."""

    labels: Tuple[int, ...]
    tau: Transformation

    def __post_init__(self):
        if len(self.labels) != self.tau.n:
            raise DimensionError(f"{len(self.labels)} labels for a map on [{self.tau.n}]")

    @property
    def n(self) -> int:
        return self.tau.n

    @classmethod
    def identity(cls, n: int) -> "WreathElement":
        return cls((0,) * n, Transformation.identity(n))

    @classmethod
    def of(cls, labels: Sequence[int], image: Sequence[int]) -> "WreathElement":
        return cls(tuple(labels), Transformation.of(image))

    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.tau.image, self.labels)


def wreath_mul(x: WreathElement, y: WreathElement, group: FiniteGroup) -> WreathElement:
    """(f₁,τ₁)(f₂,τ₂) = (f, τ₁·τ₂) with f(j) = f₁(j)·f₂(τ₁(j))."""
    if x.n != y.n:
        raise DimensionError(f"cannot multiply elements over [{x.n}] and [{y.n}]")
    table = group.table
    try:
        labels = tuple(table[fx][y.labels[t - 1]] for fx, t in zip(x.labels, x.tau.image))
    except IndexError:
        raise DimensionError(f"labels do not belong to {group}")
    return WreathElement(labels, compose(x.tau, y.tau))


Element = Union[WreathElement, Transformation]


def power(x: Element, k: int, group: FiniteGroup = None) -> Element:
    """k-fold product of x with itself by repeated squaring; k = 0 gives the unit."""
    if k < 0:
        raise PreconditionError("power needs k >= 0")
    if isinstance(x, Transformation):
        mul = compose
        result = Transformation.identity(x.n)
    else:
        group = group or trivial_group()
        mul = lambda a, b: wreath_mul(a, b, group)  # noqa: E731
        result = WreathElement.identity(x.n)
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


# ---------- EQUATIONS ----------
@dataclass(frozen=True)
class EquationSpec:
    """The equation X^α = X^β with 0 <= α < β."""

    alpha: int
    beta: int

    def __post_init__(self):
        if not 0 <= self.alpha < self.beta:
            raise PreconditionError(f"need 0 <= alpha < beta, got alpha={self.alpha}, beta={self.beta}")

    @property
    def period(self) -> int:
        return self.beta - self.alpha

    def divisors(self) -> List[int]:
        """Divisors γ of β − α, ascending (trial division)."""
        d = self.period
        return [g for g in range(1, d + 1) if d % g == 0]

    def __str__(self) -> str:
        return f"X^{self.alpha} = X^{self.beta}"


# ---------- FUNCTIONAL GRAPH STRUCTURE ----------
@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components of τ with each block's cycle length and tree height."""

    blocks: Tuple[Tuple[int, ...], ...]
    cycle_lengths: Tuple[int, ...]
    heights: Tuple[int, ...]
    n: int = field(default=0)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


_UNSEEN, _ON_PATH, _DONE = 0, 1, 2


def decompose(tau: Transformation) -> ComponentDecomposition:
    """
    Split [n] into the weak components of τ's functional graph.

    Iterative pointer chasing: every walk either closes a new cycle on the
    current path or runs into an already classified vertex, whose component
    and distance-to-cycle are inherited backwards along the path.
    """
    n = tau.n
    succ = [v - 1 for v in tau.image]
    state = [_UNSEEN] * n
    comp = [-1] * n
    depth = [0] * n
    cycle_lengths: List[int] = []

    for start in range(n):
        if state[start] != _UNSEEN:
            continue
        path = []
        v = start
        while state[v] == _UNSEEN:
            state[v] = _ON_PATH
            path.append(v)
            v = succ[v]

        if state[v] == _ON_PATH:
            # closed a new cycle inside the current path
            cut = path.index(v)
            cycle = path[cut:]
            cid = len(cycle_lengths)
            cycle_lengths.append(len(cycle))
            for u in cycle:
                comp[u], depth[u], state[u] = cid, 0, _DONE
            path = path[:cut]

        # tail vertices, nearest the settled part first
        for u in reversed(path):
            nxt = succ[u]
            comp[u] = comp[nxt]
            depth[u] = depth[nxt] + 1
            state[u] = _DONE

    members: List[List[int]] = [[] for _ in cycle_lengths]
    heights = [0] * len(cycle_lengths)
    for u in range(n):
        members[comp[u]].append(u + 1)
        if depth[u] > heights[comp[u]]:
            heights[comp[u]] = depth[u]

    order = sorted(range(len(members)), key=lambda c: members[c][0])
    return ComponentDecomposition(
        blocks=tuple(tuple(members[c]) for c in order),
        cycle_lengths=tuple(cycle_lengths[c] for c in order),
        heights=tuple(heights[c] for c in order),
        n=n,
    )


def is_admissible(tau: Transformation, lam: IndexSet, m: IndexSet) -> bool:
    """Block sizes all in Λ and block count in M."""
    decomposition = decompose(tau)
    return len(decomposition) in m and all(size in lam for size in decomposition.sizes)


def structure_law_holds(tau: Transformation, eq: EquationSpec) -> bool:
    """Cycle lengths divide β − α and every in-tree has height at most α."""
    decomposition = decompose(tau)
    return all(c and eq.period % c == 0 for c in decomposition.cycle_lengths) and all(
        h <= eq.alpha for h in decomposition.heights
    )
