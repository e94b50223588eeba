"""
Exact counting through truncated exponential generating functions.

Every series carries exact ``Fraction`` coefficients up to a truncation
order N. Counting sequences are read off as n! times the coefficients and are
checked to be integers on construction.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from algebra_core import EquationSpec, FiniteGroup, iota
from error_handler import IntegralityError, PreconditionError, UnsupportedCaseError
from enhanced_logging import get_enhanced_logger, log_performance
from index_set import IndexSet

logger = get_enhanced_logger("egf_engine")

MEANINGS = ("s_count", "c_count", "b_count", "a_count", "d_count")


# ---------- SERIES ----------
@dataclass(frozen=True)
class RationalSeries:
    """Σ_{k<=order} coefficients[k]·z^k over the rationals."""

    order: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise PreconditionError("truncation order must be non-negative")
        if len(self.coefficients) != self.order + 1:
            raise PreconditionError(
                f"expected {self.order + 1} coefficients, got {len(self.coefficients)}"
            )

    @classmethod
    def from_coefficients(cls, coefficients: Iterable, order: int) -> "RationalSeries":
        coeffs = [Fraction(c) for c in coefficients][: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls.from_coefficients([], order)

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls.from_coefficients([1], order)

    @classmethod
    def variable(cls, order: int, scale=1) -> "RationalSeries":
        """scale·z"""
        return cls.from_coefficients([0, scale], order)

    @classmethod
    def exponential(cls, order: int, scale=1) -> "RationalSeries":
        """exp(scale·z)"""
        scale = Fraction(scale)
        return cls(order, tuple(scale**k / math.factorial(k) for k in range(order + 1)))

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k <= self.order else Fraction(0)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        _check_orders(self, other)
        return RationalSeries(self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        _check_orders(self, other)
        return RationalSeries(self.order, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            return series_mul(self, other)
        factor = Fraction(other)
        return RationalSeries(self.order, tuple(factor * a for a in self.coefficients))

    __rmul__ = __mul__

    def shift(self, k: int) -> "RationalSeries":
        """z^k · self, truncated."""
        return RationalSeries.from_coefficients([0] * k + list(self.coefficients), self.order)


def _check_orders(f: RationalSeries, g: RationalSeries) -> None:
    if f.order != g.order:
        raise PreconditionError(f"truncation orders differ: {f.order} vs {g.order}")


def series_mul(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    _check_orders(f, g)
    a, b = f.coefficients, g.coefficients
    # skip the leading zeros of f; z-powers make this the common case
    first = next((i for i, c in enumerate(a) if c), f.order + 1)
    out = [Fraction(0)] * (f.order + 1)
    for i in range(first, f.order + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(f.order + 1 - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return RationalSeries(f.order, tuple(out))


def series_power(f: RationalSeries, k: int) -> RationalSeries:
    if k < 0:
        raise PreconditionError("series power needs k >= 0")
    result = RationalSeries.one(f.order)
    for _ in range(k):
        result = series_mul(result, f)
    return result


def series_exp(f: RationalSeries) -> RationalSeries:
    """exp(f) for f with zero constant term, via n·g_n = Σ_{k=1}^n k·f_k·g_{n−k}."""
    if f[0] != 0:
        raise PreconditionError("series_exp needs a zero constant term")
    N = f.order
    g = [Fraction(0)] * (N + 1)
    g[0] = Fraction(1)
    weighted = [k * f.coefficients[k] for k in range(N + 1)]
    for n in range(1, N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if weighted[k]:
                acc += weighted[k] * g[n - k]
        g[n] = acc / n
    return RationalSeries(N, tuple(g))


def series_restrict(f: RationalSeries, K: IndexSet) -> RationalSeries:
    """(f)_K: keep exactly the coefficients whose exponent lies in K."""
    return RationalSeries(
        f.order, tuple(c if k in K else Fraction(0) for k, c in enumerate(f.coefficients))
    )


def series_compose(g: RationalSeries, f: RationalSeries) -> RationalSeries:
    """g(f(z)); requires f(0) = 0."""
    _check_orders(g, f)
    if f[0] != 0:
        raise PreconditionError("series_compose needs an inner series with zero constant term")
    N = f.order

    # f = c·z: plain rescaling of coefficients
    if all(not c for c in f.coefficients[2:]):
        c = f[1]
        return RationalSeries(N, tuple(g.coefficients[k] * c**k for k in range(N + 1)))

    result = RationalSeries.from_coefficients([g.coefficients[N]], N)
    for k in range(N - 1, -1, -1):
        result = series_mul(result, f)
        result = RationalSeries(N, (result.coefficients[0] + g.coefficients[k],) + result.coefficients[1:])
    return result


def restricted_exp(K: IndexSet, order: int, scale=1) -> RationalSeries:
    """e_K(scale·z) = Σ_{k∈K} (scale·z)^k / k!"""
    return series_restrict(RationalSeries.exponential(order, scale), K)


def apply_restricted_exp(M: IndexSet, inner: RationalSeries) -> RationalSeries:
    """e_M(inner); falls back to series_exp when M is all of ℕ₀."""
    if M.contains_all:
        return series_exp(inner)
    return series_compose(restricted_exp(M, inner.order), inner)


def delta_series(alpha: int, order: int) -> RationalSeries:
    """Δ_0 = z, Δ_α = z·exp(Δ_{α−1}): EGF of rooted trees of height at most α."""
    if alpha < 0:
        raise PreconditionError("alpha must be non-negative")
    delta = RationalSeries.variable(order)
    for _ in range(alpha):
        delta = series_exp(delta).shift(1)
    return delta


# ---------- COUNT SEQUENCES ----------
@dataclass(frozen=True)
class CountSequence:
    values: Tuple[int, ...]
    meaning: str

    def __post_init__(self):
        if self.meaning not in MEANINGS:
            raise PreconditionError(f"unknown sequence meaning '{self.meaning}'")
        if any(v < 0 for v in self.values):
            raise IntegralityError(f"negative count in {self.meaning}")

    @classmethod
    def from_series(cls, series: RationalSeries, meaning: str) -> "CountSequence":
        values = []
        for n, c in enumerate(series.coefficients):
            scaled = c * math.factorial(n)
            if scaled.denominator != 1:
                raise IntegralityError(f"{n}! times coefficient {c} of z^{n} is not an integer")
            values.append(scaled.numerator)
        return cls(tuple(values), meaning)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def to_dict(self) -> Dict[str, Any]:
        """{"meaning", "values"} with the counts as decimal strings."""
        return {"meaning": self.meaning, "values": [str(v) for v in self.values]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CountSequence":
        try:
            return cls(tuple(int(v) for v in data["values"]), data["meaning"])
        except (KeyError, TypeError, ValueError) as e:
            raise PreconditionError(f"not a sequence export: {e}")


# ---------- POWER EQUATION ----------
def _divisor_weighted_sum(eq: EquationSpec, group: FiniteGroup, lam: IndexSet, order: int) -> RationalSeries:
    h = group.order
    d = eq.period
    delta_h = series_compose(delta_series(eq.alpha, order), RationalSeries.variable(order, h))
    total = RationalSeries.zero(order)
    for gamma in eq.divisors():
        weight = Fraction(iota(group, d // gamma), gamma * h)
        term = series_restrict(series_power(delta_h, gamma), lam)
        total = total + weight * term
    return total


@log_performance("solution_series")
def solution_series(
    eq: EquationSpec, group: FiniteGroup, lam: IndexSet, m: IndexSet, order: int
) -> CountSequence:
    """
    Number of (Λ,M)-admissible solutions of X^α = X^β in H≀T_n for n <= order:
    n! [z^n] e_M((1/|H|) Σ_{γ|β−α} ι((β−α)/γ)/γ · ((Δ_α(|H|z))^γ)_Λ).
    """
    if eq.alpha == 0:
        raise UnsupportedCaseError("alpha = 0 (X^beta = 1 in the group H wr S_n) is not covered")
    if order < 0:
        raise PreconditionError("order must be non-negative")
    logger.debug("Building solution series", equation=str(eq), group=str(group), lam=str(lam), m=str(m), order=order)
    inner = _divisor_weighted_sum(eq, group, lam, order)
    return CountSequence.from_series(apply_restricted_exp(m, inner), "s_count")


@log_performance("solution_series_alpha1")
def solution_series_alpha1(
    beta: int, group: FiniteGroup, lam: IndexSet, m: IndexSet, order: int
) -> CountSequence:
    """Specialisation to α = 1 with e_{(Λ−γ)∩ℕ₀}(γ|H|z) in place of the restricted powers."""
    if beta < 2:
        raise PreconditionError("beta must be at least 2")
    eq = EquationSpec(1, beta)
    h = group.order
    inner = RationalSeries.zero(order)
    for gamma in eq.divisors():
        weight = Fraction(h ** (gamma - 1) * iota(group, eq.period // gamma), gamma)
        inner = inner + weight * restricted_exp(lam.shift(gamma), order, gamma * h).shift(gamma)
    return CountSequence.from_series(apply_restricted_exp(m, inner), "s_count")


# ---------- COMMUTING IDEMPOTENT PAIRS ----------
def _c_rows(n: int, r_values: Sequence[int]) -> int:
    """Partial triple sum over the given r values, (r, s, t) lexicographic."""
    fact = math.factorial
    total = 0
    for r in r_values:
        for s in range(1, n - r + 1):
            m = n - r - s
            head = fact(n) // (fact(r) * fact(s) * fact(m)) * s ** (m + 1)
            if r == 0:
                # only u = 0, i.e. t = m, survives with 0^0 = 1
                total += head
                continue
            # C(m, t)·r^(m−t), updated in place along t
            term = r**m
            for t in range(m + 1):
                total += head * term
                if t < m:
                    term = term * (m - t) // ((t + 1) * r)
    return total


@log_performance("c_exact")
def c_exact(n: int, workers: int = 1) -> int:
    """
    Connected commuting idempotent pairs on [n]:
    Σ_{r+s+t<=n} n!/(r!s!t!u!)·r^u·s^{n−r−s+1}, u = n−r−s−t, 0^0 = 1.
    """
    if n < 1:
        raise PreconditionError("c_exact needs n >= 1")
    rs = list(range(0, n + 1))
    if workers <= 1 or n < 40:
        return _c_rows(n, rs)
    chunks = [rs[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_c_rows, [n] * len(chunks), chunks))


def c_exact_collapsed(n: int) -> int:
    """c(n) with the t-sum closed: Σ_{r,s} C(n,r)·C(n−r,s)·s^{m+1}·(r+1)^m, m = n−r−s."""
    if n < 1:
        raise PreconditionError("c_exact_collapsed needs n >= 1")
    total = 0
    for r in range(n + 1):
        cr = math.comb(n, r)
        for s in range(1, n - r + 1):
            m = n - r - s
            total += cr * math.comb(n - r, s) * s ** (m + 1) * (r + 1) ** m
    return total


def c_sequence(order: int, collapsed: bool = True) -> CountSequence:
    """(0, c(1), ..., c(order)) tagged as connected counts."""
    compute = c_exact_collapsed if collapsed else c_exact
    return CountSequence((0,) + tuple(compute(n) for n in range(1, order + 1)), "c_count")


def d_exact(n: int, group: FiniteGroup) -> int:
    """Connected solutions in H≀T_n: |H|^(n−1)·c(n)."""
    if n < 1:
        raise PreconditionError("d_exact needs n >= 1")
    return group.order ** (n - 1) * c_exact_collapsed(n)


def d_sequence(order: int, group: FiniteGroup) -> CountSequence:
    c = c_sequence(order)
    h = group.order
    return CountSequence(
        (0,) + tuple(h ** (n - 1) * c[n] for n in range(1, order + 1)), "d_count"
    )


# ---------- EXPONENTIAL FORMULA ----------
_TOTAL_OF = {"c_count": "b_count", "d_count": "a_count"}
_CONNECTED_OF = {v: k for k, v in _TOTAL_OF.items()}


def exp_transform(connected: CountSequence) -> CountSequence:
    """b_n = Σ_{k=1}^n C(n−1,k−1)·a_k·b_{n−k}, b_0 = 1 (labelled exponential formula)."""
    a = connected.values
    if a and a[0] != 0:
        raise PreconditionError("exp_transform needs value[0] = 0")
    if not a:
        raise PreconditionError("exp_transform needs a non-empty sequence")
    b: List[int] = [1]
    for n in range(1, len(a)):
        b.append(sum(math.comb(n - 1, k - 1) * a[k] * b[n - k] for k in range(1, n + 1)))
    return CountSequence(tuple(b), _TOTAL_OF.get(connected.meaning, "b_count"))


def log_transform(total: CountSequence) -> CountSequence:
    """Inverse of exp_transform: connected counts from totals with value[0] = 1."""
    b = total.values
    if not b or b[0] != 1:
        raise PreconditionError("log_transform needs value[0] = 1")
    a: List[int] = [0]
    for n in range(1, len(b)):
        rest = sum(math.comb(n - 1, k - 1) * a[k] * b[n - k] for k in range(1, n))
        a.append(b[n] - rest)
    return CountSequence(tuple(a), _CONNECTED_OF.get(total.meaning, "c_count"))


def a_sequence(order: int, group: FiniteGroup) -> CountSequence:
    """All commuting idempotent pairs in H≀T_n, n <= order."""
    return exp_transform(d_sequence(order, group))
