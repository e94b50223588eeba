"""
Floating-point asymptotics in natural-log scale.

- the saddle-point (Hayman) estimate for the number s(n) of solutions of X^α = X^β
- the critical point (r_n, s_n, t_n) of F(r,s,t) and the estimates of c(n) and a(n)
  built on it
- elementary expansions, the commutativity cost and the exponential transfer checks
- Gaussian lattice sums and their Poisson closed forms
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize
from scipy.special import logsumexp

from algebra_core import EquationSpec, FiniteGroup, iota
from config import get_config_value
from error_handler import DomainError, NumericOverflowError, PreconditionError, SolverError
from enhanced_logging import get_enhanced_logger, log_performance
from special_functions import digamma, iterated_log, log_factorial, log_gamma, trigamma

logger = get_enhanced_logger("asymptotics")

LOG_2PI = math.log(2.0 * math.pi)
# exp() overflows a double just above this
_MAX_LOG = 690.0


@dataclass(frozen=True)
class LogEstimate:
    """Natural log of an estimated count, with its additive breakdown."""

    n: float
    log_value: float
    parts: Tuple[Tuple[str, float], ...]
    form: str
    details: Dict[str, float] = field(default_factory=dict, compare=False)

    @classmethod
    def from_parts(cls, n: float, parts: Sequence[Tuple[str, float]], form: str, **details) -> "LogEstimate":
        parts = tuple((label, float(value)) for label, value in parts)
        return cls(n, math.fsum(v for _, v in parts), parts, form, details)

    def parts_dict(self) -> Dict[str, float]:
        return dict(self.parts)


def log_count(value: int) -> float:
    """Natural log of a (possibly huge) positive integer."""
    if value <= 0:
        raise DomainError("log of a non-positive count")
    return math.log(value)


# ---------- TREE FUNCTIONS Δ_α ----------
@dataclass(frozen=True)
class DeltaValue:
    """Δ_α(x) with its first two derivatives; logs stay finite after the values overflow."""

    value: float
    first: float
    second: float
    log_value: float
    log_first: float
    overflow: bool = False


def delta_levels(alpha: int, x: float) -> List[DeltaValue]:
    """Δ_0(x), ..., Δ_α(x) via Δ_a = x·exp(Δ_{a−1}), Δ'_a = Δ_a(1/x + Δ'_{a−1})."""
    if alpha < 0:
        raise DomainError("alpha must be non-negative")
    if not x > 0.0:
        raise DomainError(f"Δ is evaluated at positive arguments only, got {x}")
    levels = [DeltaValue(x, 1.0, 0.0, math.log(x), 0.0)]
    for _ in range(alpha):
        prev = levels[-1]
        if prev.overflow:
            levels.append(DeltaValue(math.inf, math.inf, math.inf, math.inf, math.inf, True))
            continue
        log_value = math.log(x) + prev.value
        log_first = log_value + math.log(1.0 / x + prev.first)
        inner = 2.0 * prev.first / x + prev.first**2 + prev.second
        overflow = log_first > _MAX_LOG or log_value > _MAX_LOG
        if overflow:
            logger.debug("Δ overflow, continuing in log scale", x=x, log_value=log_value)
            levels.append(DeltaValue(math.inf, math.inf, math.inf, log_value, log_first, True))
            continue
        value = math.exp(log_value)
        levels.append(
            DeltaValue(value, math.exp(log_first), value * inner, log_value, log_first)
        )
    return levels


def delta_eval(alpha: int, x: float) -> DeltaValue:
    return delta_levels(alpha, x)[-1]


# ---------- HAYMAN SADDLE FOR s(n) ----------
def _divisor_weights(eq: EquationSpec, group: FiniteGroup) -> List[Tuple[int, int]]:
    return [(gamma, iota(group, eq.period // gamma)) for gamma in eq.divisors()]


def _require_alpha(eq: EquationSpec) -> None:
    if eq.alpha < 1:
        raise PreconditionError("the saddle-point estimates need alpha >= 1")


def log_psi(r: float, eq: EquationSpec, group: FiniteGroup) -> float:
    """log Ψ(r) = (1/|H|)·Σ_γ ι((β−α)/γ)/γ·Δ_α(|H|r)^γ (all components admissible)."""
    _require_alpha(eq)
    h = group.order
    d = delta_eval(eq.alpha, h * r)
    if d.overflow:
        raise NumericOverflowError(f"Ψ({r}) exceeds double range")
    return math.fsum(w / gamma * d.value**gamma for gamma, w in _divisor_weights(eq, group)) / h


def hayman_log_a(r: float, eq: EquationSpec, group: FiniteGroup) -> float:
    """log a(r), a(r) = r·Σ_γ ι((β−α)/γ)·Δ_α(|H|r)^(γ−1)·Δ'_α(|H|r)."""
    _require_alpha(eq)
    if not r > 0.0:
        raise DomainError("hayman_a needs r > 0")
    d = delta_eval(eq.alpha, group.order * r)
    if math.isinf(d.log_value):
        return math.inf
    weights = _divisor_weights(eq, group)
    terms = [(gamma - 1) * d.log_value + d.log_first for gamma, _ in weights]
    return math.log(r) + float(logsumexp(terms, b=[w for _, w in weights]))


def hayman_a(r: float, eq: EquationSpec, group: FiniteGroup) -> float:
    log_a = hayman_log_a(r, eq, group)
    if log_a > _MAX_LOG:
        logger.warning("a(r) overflows, use hayman_log_a", r=r, log_a=log_a)
        return math.inf
    return math.exp(log_a)


def hayman_b(r: float, eq: EquationSpec, group: FiniteGroup) -> float:
    """b(r) = r·a'(r) = a(r) + r²|H|·Σ_γ ι·[(γ−1)Δ^(γ−2)Δ'² + Δ^(γ−1)Δ'']."""
    _require_alpha(eq)
    h = group.order
    d = delta_eval(eq.alpha, h * r)
    if d.overflow:
        logger.warning("b(r) overflows", r=r)
        return math.inf
    curvature = math.fsum(
        w * ((gamma - 1) * d.value ** (gamma - 2) * d.first**2 + d.value ** (gamma - 1) * d.second)
        for gamma, w in _divisor_weights(eq, group)
    )
    return hayman_a(r, eq, group) + r * r * h * curvature


def hayman_radius_guess(n: float, eq: EquationSpec, group: FiniteGroup) -> float:
    """Leading-order radius (1/|H|)·log^(α−1)(log(n)/(β−α))."""
    _require_alpha(eq)
    if n <= 1:
        raise DomainError("radius guess needs n > 1")
    return iterated_log(math.log(n) / eq.period, eq.alpha - 1) / group.order


@log_performance("hayman_radius")
def hayman_radius(
    n: float, eq: EquationSpec, group: FiniteGroup, tolerance: Optional[float] = None
) -> float:
    """The root of a(r) = n: doubling bracket, Brent's method, Newton polish."""
    _require_alpha(eq)
    if n < 1:
        raise PreconditionError("hayman_radius needs n >= 1")
    tolerance = tolerance or get_config_value("hayman_tolerance", 1e-9)
    log_n = math.log(n)
    trace = []

    def f(r: float) -> float:
        return hayman_log_a(r, eq, group) - log_n

    lo, hi = 1e-9, 1.0
    if f(lo) >= 0:
        raise SolverError("a(r) = n has no root above 1e-9", iterate=[lo], trace=trace)
    for _ in range(2000):
        if f(hi) > 0:
            break
        lo, hi = hi, 2.0 * hi
        trace.append(("double", hi))
    else:
        raise SolverError(f"no bracket for a(r) = {n}", iterate=[hi], trace=trace)

    # shrink until f(hi) is finite so Brent's interpolation stays well defined
    while not math.isfinite(f(hi)):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
        trace.append(("shrink", lo, hi))

    r = optimize.brentq(f, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)

    for _ in range(5):
        a, b = hayman_a(r, eq, group), hayman_b(r, eq, group)
        if abs(a - n) <= tolerance * n or not (math.isfinite(b) and b > 0):
            break
        r -= (a - n) * r / b
        trace.append(("newton", r))

    residual = abs(math.expm1(f(r)))
    if residual > tolerance:
        raise SolverError(
            f"radius residual {residual:.3e} above tolerance", iterate=[r], residuals=[residual], trace=trace
        )
    logger.debug("Solved radius", n=n, equation=str(eq), r=r, residual=residual)
    return r


@log_performance("s_asymptotic")
def s_asymptotic(n: int, eq: EquationSpec, group: FiniteGroup, form: str = "theorem") -> LogEstimate:
    """
    log s(n) from the saddle point of the solution EGF.

    form="theorem": the closed assembly in terms of Δ_1, ..., Δ_α at |H|·r_n.
    form="hayman":  log Ψ(r_n) − n·log r_n − ½·log(2π·b(r_n)) + log n!.
    """
    _require_alpha(eq)
    r = hayman_radius(n, eq, group)
    h, d = group.order, eq.period

    if form == "hayman":
        parts = [
            ("log_psi", log_psi(r, eq, group)),
            ("radius_power", -n * math.log(r)),
            ("gaussian", -0.5 * (LOG_2PI + math.log(hayman_b(r, eq, group)))),
            ("log_factorial", log_factorial(n)),
        ]
        return LogEstimate.from_parts(n, parts, form, radius=r)
    if form != "theorem":
        raise PreconditionError(f"unknown form '{form}' (expected theorem or hayman)")

    levels = delta_levels(eq.alpha, h * r)
    top = levels[-1]
    if top.overflow:
        raise NumericOverflowError(f"Δ_{eq.alpha}({h * r}) exceeds double range")
    chain = iterated_log(math.log(n) / d, eq.alpha - 1)
    if not chain > 0:
        raise DomainError(f"n={n} is too small for the iterated logarithm of order {eq.alpha - 1}")

    ratio = math.exp(top.log_value - top.log_first) / (d * h * r)
    correction = math.fsum(
        (1.0 / gamma - 1.0 / d) * w * top.value**gamma for gamma, w in _divisor_weights(eq, group)
    ) / h
    parts = [
        ("radius_power", -n * math.log(r)),
        (
            "square_root",
            -0.5 * (math.log(d) + math.fsum(lv.log_value for lv in levels[1:-1]) + math.log(chain)),
        ),
        ("exponent", n * (ratio + math.log(n) - 1.0)),
        ("divisor_correction", correction),
    ]
    return LogEstimate.from_parts(n, parts, form, radius=r)


def elementary_expansion_log_s(n: float) -> float:
    """n log n − n log log n − n + 2n log log n/log n + n/log n for X² = X in T_n."""
    if n < 3:
        raise DomainError("elementary expansions need n >= 3")
    L = math.log(n)
    LL = math.log(L)
    return n * L - n * LL - n + 2.0 * n * LL / L + n / L


# ---------- CRITICAL POINT OF F ----------
@dataclass(frozen=True)
class CriticalPoint:
    n: float
    r: float
    s: float
    t: float
    residuals: Tuple[float, float, float]
    iterations: int
    method: str = "newton"

    @property
    def point(self) -> Tuple[float, float, float]:
        return (self.r, self.s, self.t)

    @property
    def max_residual(self) -> float:
        return max(abs(e) for e in self.residuals)


def leading_order_guess(n: float) -> Tuple[float, float, float]:
    """r ~ s ~ n/(2 log n), t ~ 2 log n."""
    L = math.log(n)
    return (n / (2.0 * L), n / (2.0 * L), 2.0 * L)


def refined_guess(n: float) -> Tuple[float, float, float]:
    """The expansions of r_n, s_n through n/log²n and of t_n through 1/log n."""
    L = math.log(n)
    LL = math.log(L)
    log2 = math.log(2.0)
    rs = n / (2.0 * L) + 0.75 * n * LL / L**2 + (3.0 * log2 - 2.0) / 4.0 * n / L**2
    t = 2.0 * L - 3.0 * LL - 3.0 * log2 - 1.0 + 4.5 * LL / L + (9.0 * log2 - 4.0) / (2.0 * L)
    return (rs, rs, t)


def critical_equations(n: float, r: float, s: float, t: float) -> np.ndarray:
    """Gradient of log F at (r, s, t)."""
    u = n - r - s - t
    pu = digamma(u + 1.0)
    log_rs = math.log(r) + math.log(s)
    return np.array([
        -log_rs + u / r - digamma(r + 1.0) + pu,
        -log_rs + (n - r - s + 1.0) / s - digamma(s + 1.0) + pu,
        -math.log(r) - digamma(t + 1.0) + pu,
    ])


def critical_jacobian(n: float, r: float, s: float, t: float) -> np.ndarray:
    """Hessian of log F, i.e. the Jacobian of critical_equations."""
    u = n - r - s - t
    q = trigamma(u + 1.0)
    return np.array([
        [(s + t - n) / r**2 - 1.0 / r - trigamma(r + 1.0) - q, -1.0 / s - 1.0 / r - q, -1.0 / r - q],
        [-1.0 / r - 1.0 / s - q, (r - n - 1.0) / s**2 - 1.0 / s - trigamma(s + 1.0) - q, -q],
        [-1.0 / r - q, -q, -trigamma(t + 1.0) - q],
    ])


def _interior(n: float, x: np.ndarray) -> bool:
    return bool(np.all(x > 1e-6) and x.sum() < n - 1.0)


def _damped_newton(n, start, tolerance, max_iterations, trace):
    x = np.array(start, dtype=float)
    e = critical_equations(n, *x)
    for iteration in range(max_iterations):
        norm = np.max(np.abs(e))
        trace.append((iteration, tuple(x), norm))
        logger.debug("Newton iterate", n=n, iteration=iteration, r=x[0], s=x[1], t=x[2], residual=norm)
        if norm <= tolerance:
            return x, e, iteration
        try:
            step = np.linalg.solve(critical_jacobian(n, *x), -e)
        except np.linalg.LinAlgError:
            return None, e, iteration
        lam = 1.0
        while lam > 1e-12:
            y = x + lam * step
            if _interior(n, y):
                ey = critical_equations(n, *y)
                if np.max(np.abs(ey)) < norm:
                    x, e = y, ey
                    break
            lam *= 0.5
        else:
            return None, e, iteration
    return (x, e, max_iterations) if np.max(np.abs(e)) <= tolerance else (None, e, max_iterations)


@log_performance("critical_point")
def critical_point(
    n: float,
    floor: Optional[float] = None,
    tolerance: Optional[float] = None,
    max_iterations: Optional[int] = None,
) -> CriticalPoint:
    """
    Solve ∂log F/∂r = ∂log F/∂s = ∂log F/∂t = 0 for the maximum of F.

    Damped Newton from the leading-order guess; if that stalls, scipy's hybrid
    method from the refined guess. The returned point is certified by its
    residuals, not by the path that reached it.
    """
    floor = floor if floor is not None else get_config_value("solver_floor", 100.0)
    tolerance = tolerance or get_config_value("solver_tolerance", 1e-10)
    max_iterations = max_iterations or get_config_value("solver_max_iterations", 200)
    if n < floor:
        raise PreconditionError(f"critical_point needs n >= {floor} (configured solver floor)")
    if n < 3:
        raise PreconditionError("critical_point needs n >= 3")

    trace: List = []
    x, e, iterations = _damped_newton(n, leading_order_guess(n), tolerance, max_iterations, trace)
    method = "newton"

    if x is None:
        logger.warning("Damped Newton stalled, trying hybrid root finder", n=n, residual=float(np.max(np.abs(e))))
        start = np.array(refined_guess(n))
        if not _interior(n, start):
            start = np.array(leading_order_guess(n))

        def fun(v):
            if not _interior(n, v):
                return np.full(3, 1e6)
            return critical_equations(n, *v)

        sol = optimize.root(fun, start, jac=lambda v: critical_jacobian(n, *v), method="hybr", tol=tolerance * 1e-2)
        x, e = sol.x, fun(sol.x)
        iterations, method = int(sol.nfev), "hybr"
        if not (_interior(n, x) and np.max(np.abs(e)) <= tolerance):
            logger.error("Critical point not found", n=n, iterate=list(x), residuals=list(e))
            raise SolverError(
                f"critical point for n={n} did not converge",
                iterate=list(x),
                residuals=list(e),
                trace=trace,
            )

    return CriticalPoint(n, float(x[0]), float(x[1]), float(x[2]), tuple(float(v) for v in e), iterations, method)


def F_log(r: float, s: float, t: float, n: float) -> float:
    """
    log F(r,s,t) = log[Γ(n+1) r^u s^(n−r−s+1) / (Γ(r+1)Γ(s+1)Γ(t+1)Γ(u+1))],
    u = n−r−s−t, on the closed region r, s, t, u >= 0 with 0^0 = 1.
    Returns −inf where a zero base meets a positive exponent.
    """
    u = n - r - s - t
    slack = 1e-12 * max(1.0, n)
    if min(r, s, t) < 0 or u < -slack:
        raise DomainError(f"({r}, {s}, {t}) lies outside the region r+s+t <= {n}")
    u = max(u, 0.0)
    s_exp = n - r - s + 1.0

    if u == 0:
        r_term = 0.0
    elif r == 0:
        return -math.inf
    else:
        r_term = u * math.log(r)
    if s == 0:
        return -math.inf
    s_term = s_exp * math.log(s)

    return (
        log_gamma(n + 1.0)
        + r_term
        + s_term
        - log_gamma(r + 1.0)
        - log_gamma(s + 1.0)
        - log_gamma(t + 1.0)
        - log_gamma(u + 1.0)
    )


def lattice_sum_F(n: int) -> float:
    """Σ exp(F_log) over the integer points of the region; reproduces c(n) for small n."""
    terms = []
    for r in range(n + 1):
        for s in range(n - r + 1):
            for t in range(n - r - s + 1):
                value = F_log(r, s, t, n)
                if value > -math.inf:
                    terms.append(math.exp(value))
    return math.fsum(terms)


# ---------- ESTIMATES FOR c(n) AND a(n) ----------
C_FORMS = ("saddle", "closed", "hessian", "simple")


@log_performance("c_asymptotic")
def c_asymptotic(n: float, form: str = "saddle", floor: Optional[float] = None) -> LogEstimate:
    """log c(n) at the critical point, in one of the forms of C_FORMS."""
    if form not in C_FORMS:
        raise PreconditionError(f"unknown form '{form}' (expected one of {', '.join(C_FORMS)})")
    cp = critical_point(n, floor=floor)
    r, s, t = cp.point
    details = {"r": r, "s": s, "t": t}

    if form == "saddle":
        parts = [
            ("log_F", F_log(r, s, t, n)),
            ("gaussian", 1.5 * LOG_2PI),
            ("log_r", math.log(r)),
            ("log_s", math.log(s)),
            ("half_log_t", 0.5 * math.log(t)),
            ("minus_log_n", -math.log(n)),
        ]
    elif form == "hessian":
        sign, logdet = np.linalg.slogdet(-critical_jacobian(n, r, s, t))
        if sign <= 0:
            raise SolverError("Hessian at the critical point is not negative definite", iterate=cp.point)
        parts = [
            ("log_F", F_log(r, s, t, n)),
            ("gaussian", 1.5 * LOG_2PI),
            ("hessian", -0.5 * float(logdet)),
        ]
    else:
        exponent = (n / s) * (n - r + 0.5) - 3.0 * n + 2.0 * r + 2.0 * s + t + 1.0
        if form == "closed":
            prefactor = 0.5 * math.log(r) + 1.5 * math.log(s) - math.log(n)
        else:
            prefactor = math.log(n) - math.log(4.0 * math.log(n) ** 2)
        parts = [
            ("exponent", exponent),
            ("power", n * math.log(n / s)),
            ("prefactor", prefactor),
        ]
    return LogEstimate.from_parts(n, parts, form, **details)


def a_asymptotic(n: float, group: FiniteGroup, form: str = "saddle", floor: Optional[float] = None) -> LogEstimate:
    """log a(n) = (n−1)·log|H| + log c(n) to relative order 1/n."""
    c_est = c_asymptotic(n, form=form, floor=floor)
    parts = (("group_weight", (n - 1) * math.log(group.order)),) + c_est.parts
    return LogEstimate.from_parts(n, parts, form, **c_est.details)


def elementary_expansion_log_a(n: float, h: int = 1) -> float:
    """2n log n − 2n log log n − 2(log 2 + 1)n + 3n log log n/log n + (3 log 2 + 1)n/log n + (n−1)log h."""
    if n < 3:
        raise DomainError("elementary expansions need n >= 3")
    L = math.log(n)
    LL = math.log(L)
    log2 = math.log(2.0)
    return (
        2.0 * n * L
        - 2.0 * n * LL
        - 2.0 * (log2 + 1.0) * n
        + 3.0 * n * LL / L
        + (3.0 * log2 + 1.0) * n / L
        + (n - 1) * math.log(h)
    )


def commutativity_cost(n: float) -> float:
    """log(a(n)/s(n)²) ≈ −(2 log 2)n − n log log n/log n + (3 log 2 − 1)n/log n."""
    if n < 3:
        raise DomainError("commutativity_cost needs n >= 3")
    L = math.log(n)
    log2 = math.log(2.0)
    return -2.0 * log2 * n - n * math.log(L) / L + (3.0 * log2 - 1.0) * n / L


def commutativity_report(n: float, group: FiniteGroup, floor: Optional[float] = None) -> Dict[str, float]:
    """The expansion next to log â(n) − 2·log ŝ(n) from the estimators."""
    a_est = a_asymptotic(n, group, floor=floor)
    s_est = s_asymptotic(int(n), EquationSpec(1, 2), group)
    return {
        "n": n,
        "expansion": commutativity_cost(n),
        "estimator_difference": a_est.log_value - 2.0 * s_est.log_value,
    }


def bender_ratio(c: Sequence[int], n: int, h: int = 1) -> float:
    """a_{n−1}/a_n for a_n = h^(n−1)·c(n)/n!, i.e. n·c(n−1)/(h·c(n))."""
    if n < 2:
        raise PreconditionError("bender_ratio needs n >= 2")
    return float(Fraction(n * c[n - 1], h * c[n]))


def bender_excess(c: Sequence[int], b: Sequence[int], n: int) -> float:
    """b(n)/c(n) − 1."""
    return float(Fraction(b[n], c[n]) - 1)


# ---------- GAUSSIAN LATTICE SUMS ----------
@dataclass(frozen=True)
class LatticeCheck:
    closed_form: float
    direct_sum: float

    @property
    def relative_discrepancy(self) -> float:
        return abs(self.direct_sum - self.closed_form) / abs(self.direct_sum)


def _check_quadratic_form(alpha: float, beta: float, gamma: float) -> None:
    if not alpha > 0 or beta * beta - 4.0 * alpha * gamma >= 0:
        raise DomainError("2d Gaussian sums need alpha > 0 and beta² − 4·alpha·gamma < 0")


def gaussian_sum_1d(alpha: float, beta: float) -> float:
    """Poisson closed form of Σ_k exp(−αk² + βk): exp(β²/4α)·√(π/α)."""
    if not alpha > 0:
        raise DomainError("gaussian_sum_1d needs alpha > 0")
    return math.exp(beta * beta / (4.0 * alpha)) * math.sqrt(math.pi / alpha)


def gaussian_sum_2d(alpha: float, beta: float, gamma: float) -> float:
    """Poisson closed form of Σ_{k,l} exp(−αk² − βkl − γl²): 2π/√(4αγ − β²)."""
    _check_quadratic_form(alpha, beta, gamma)
    return 2.0 * math.pi / math.sqrt(4.0 * alpha * gamma - beta * beta)


def _sum_outward(term, center: int, cutoff: float) -> float:
    """Σ_k term(k) walking both ways from ``center`` until terms drop below cutoff."""
    values = [term(center)]
    for direction in (1, -1):
        k = center + direction
        while True:
            v = term(k)
            values.append(v)
            if v < cutoff and (k - center) * direction > 1:
                break
            k += direction
    return math.fsum(values)


def lattice_sum_1d(alpha: float, beta: float, cutoff: Optional[float] = None) -> float:
    cutoff = cutoff or get_config_value("lattice_cutoff", 1e-30)
    if not alpha > 0:
        raise DomainError("lattice_sum_1d needs alpha > 0")
    return _sum_outward(lambda k: math.exp(-alpha * k * k + beta * k), round(beta / (2.0 * alpha)), cutoff)


def lattice_sum_2d(alpha: float, beta: float, gamma: float, cutoff: Optional[float] = None) -> float:
    cutoff = cutoff or get_config_value("lattice_cutoff", 1e-30)
    _check_quadratic_form(alpha, beta, gamma)

    def row(k: int) -> float:
        return _sum_outward(
            lambda j: math.exp(-alpha * k * k - beta * k * j - gamma * j * j),
            round(-beta * k / (2.0 * gamma)),
            cutoff,
        )

    return _sum_outward(row, 0, cutoff)


def verify_gaussian_1d(alpha: float, beta: float, cutoff: Optional[float] = None) -> LatticeCheck:
    return LatticeCheck(gaussian_sum_1d(alpha, beta), lattice_sum_1d(alpha, beta, cutoff))


def verify_gaussian_2d(alpha: float, beta: float, gamma: float, cutoff: Optional[float] = None) -> LatticeCheck:
    return LatticeCheck(gaussian_sum_2d(alpha, beta, gamma), lattice_sum_2d(alpha, beta, gamma, cutoff))
