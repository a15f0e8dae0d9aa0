"""One-dimensional minimization of h(kappa, .) over the shape parameter.

Optimization runs in log-alpha so the full feature range (argmins from
~0.14 to ~33.5, infima at the 0 and infinity boundaries) brackets
uniformly. brent_min is a classic golden-section / parabolic-interpolation
minimizer (Numerical Recipes style) with an evaluation budget.
"""

import math
from dataclasses import dataclass

from .gamma_prob import Kappa, h
from .specfun import Probability

__all__ = [
    "OptimizationResult",
    "NoInteriorMinimum",
    "MaxEvaluations",
    "bracket_minimum",
    "brent_min",
    "min_h",
    "scan",
    "DEFAULT_LOG_LO",
    "DEFAULT_LOG_HI",
]

DEFAULT_LOG_LO = math.log(1e-4)
DEFAULT_LOG_HI = math.log(1e6)
DEFAULT_TOL = 1e-8

_GOLDEN = 0.3819660112501051


class NoInteriorMinimum(Exception):
    """The sampled minimum sits on a boundary of the search interval.

    For kappa <= 1 this is the expected diagnosis: the infimum of
    h(kappa, .) is a limit, not an attained minimum.
    """

    def __init__(self, boundary, abscissa, value):
        self.boundary = boundary  # "lower" or "upper"
        self.abscissa = abscissa
        self.value = value
        super().__init__(
            f"no interior minimum: grid minimum at {boundary} boundary "
            f"(x={abscissa:.6g}, f={value:.6g})"
        )


class MaxEvaluations(Exception):
    """The minimizer exceeded its evaluation budget."""


@dataclass(frozen=True)
class OptimizationResult:
    argmin: float
    min_value: float
    bracket: tuple
    evaluations: int
    converged: bool


def bracket_minimum(f, lo, hi, grid_n):
    """Bracket a minimum of f on [lo, hi] from a uniform grid.

    Returns the first triple (x[i-1], x[i], x[i+1]) scanning left to right
    with f strictly smaller at the middle point. Raises NoInteriorMinimum
    when the sampled minimum is at a boundary and no such triple exists.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got {lo}, {hi}")
    if grid_n < 3:
        raise ValueError(f"need grid_n >= 3, got {grid_n}")
    step = (hi - lo) / (grid_n - 1)
    xs = [lo + i * step for i in range(grid_n)]
    xs[-1] = hi
    fs = [f(x) for x in xs]
    for i in range(1, grid_n - 1):
        if fs[i] < fs[i - 1] and fs[i] < fs[i + 1]:
            return (xs[i - 1], xs[i], xs[i + 1])
    if fs[0] <= fs[-1]:
        raise NoInteriorMinimum("lower", xs[0], fs[0])
    raise NoInteriorMinimum("upper", xs[-1], fs[-1])


def brent_min(f, bracket, tol, max_evaluations=200):
    """Locate the bracketed minimum to abscissa tolerance tol."""
    lo, mid, hi = bracket
    if not (lo < mid < hi):
        raise ValueError(f"invalid bracket {bracket}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    evaluations = 0

    def eval_f(xx):
        nonlocal evaluations
        evaluations += 1
        if evaluations > max_evaluations:
            raise MaxEvaluations(f"exceeded {max_evaluations} objective evaluations")
        return f(xx)

    a, b = lo, hi
    x = w = v = mid
    fx = fw = fv = eval_f(x)
    d = e = 0.0
    converged = False
    while evaluations < max_evaluations:
        m = 0.5 * (a + b)
        tol1 = tol * abs(x) + 1e-15
        tol2 = 2.0 * tol1
        if abs(x - m) <= tol2 - 0.5 * (b - a):
            converged = True
            break
        use_golden = True
        if abs(e) > tol1:
            # parabolic fit through (x, w, v)
            r = (x - w) * (fx - fv)
            q = (x - v) * (fx - fw)
            p = (x - v) * q - (x - w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = abs(q)
            e_prev, e = e, d
            if abs(p) < abs(0.5 * q * e_prev) and q * (a - x) < p < q * (b - x):
                d = p / q
                u = x + d
                if u - a < tol2 or b - u < tol2:
                    d = tol1 if x < m else -tol1
                use_golden = False
        if use_golden:
            e = (b - x) if x < m else (a - x)
            d = _GOLDEN * e
        u = x + d if abs(d) >= tol1 else x + (tol1 if d > 0 else -tol1)
        fu = eval_f(u)
        if fu <= fx:
            if u < x:
                b = x
            else:
                a = x
            v, fv, w, fw, x, fx = w, fw, x, fx, u, fu
        else:
            if u < x:
                a = u
            else:
                b = u
            if fu <= fw or w == x:
                v, fv, w, fw = w, fw, u, fu
            elif fu <= fv or v == x or v == w:
                v, fv = u, fu
    min_value = eval_f(x)  # re-evaluated, never a stale cache
    return OptimizationResult(
        argmin=x,
        min_value=min_value,
        bracket=(lo, mid, hi),
        evaluations=evaluations,
        converged=converged,
    )


def min_h(kappa, tol=DEFAULT_TOL, grid_n=200):
    """Minimize h(kappa, .) over alpha in [1e-4, 1e6], in log coordinates.

    Raises NoInteriorMinimum for kappa <= 1, where the infimum sits at the
    alpha -> infinity boundary; the exception carries the boundary value.
    """
    kappa = Kappa(kappa)

    def objective(x):
        return h(kappa, math.exp(x))

    log_bracket = bracket_minimum(objective, DEFAULT_LOG_LO, DEFAULT_LOG_HI, grid_n)
    result = brent_min(objective, log_bracket, tol)
    return OptimizationResult(
        argmin=math.exp(result.argmin),
        min_value=Probability(result.min_value),
        bracket=tuple(math.exp(x) for x in result.bracket),
        evaluations=result.evaluations,
        converged=result.converged,
    )


def scan(kappa, alpha_lo, alpha_hi, n):
    """Log-spaced table of (alpha, h(kappa, alpha)) rows."""
    kappa = Kappa(kappa)
    if not (0.0 < alpha_lo < alpha_hi):
        raise ValueError(f"need 0 < alpha_lo < alpha_hi, got {alpha_lo}, {alpha_hi}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    log_lo = math.log(alpha_lo)
    step = (math.log(alpha_hi) - log_lo) / (n - 1)
    rows = []
    for i in range(n):
        alpha = math.exp(log_lo + i * step) if i < n - 1 else alpha_hi
        rows.append((alpha, h(kappa, alpha)))
    return rows
