"""From-scratch special functions: log-gamma, regularized incomplete gamma,
and the standard normal CDF / symmetric band probability.

The incomplete gamma follows the classic series / continued-fraction split
(Numerical Recipes style), with two refinements needed at very large shape
parameters: the log-prefactor a*ln(x) - x - ln_gamma(a) is evaluated in a
cancellation-free form, and the series is summed with Kahan compensation.
Without these, probabilities near a ~ 1e6 carry ~1e-13 noise, which is too
coarse to resolve strict monotonicity of the one-sigma band probability.
"""

import math
from fractions import Fraction

__all__ = [
    "Probability",
    "ConvergenceError",
    "ln_gamma",
    "reg_lower_gamma",
    "lower_series",
    "upper_continued_fraction",
    "std_normal_band",
    "std_normal_cdf",
    "log_std_normal_sf",
]

# Supported shape range for reg_lower_gamma.
MIN_SHAPE = 1e-6
MAX_SHAPE = 1e7

# Iteration cap and convergence tolerance for series / continued fraction.
MAX_ITERATIONS = 10 ** 6
REL_TOL = 1e-15
TINY = 1e-300

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Stirling series coefficients B_{2n} / (2n (2n-1)), n = 1..8.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

_PROBABILITY_SLACK = 1e-12


class ConvergenceError(ArithmeticError):
    """Raised when an iterative expansion fails to converge within the cap."""


class Probability(float):
    """A float constrained to [0, 1].

    Values outside the interval by more than 1e-12 are rejected; values
    inside the slack are clamped onto the interval.
    """

    def __new__(cls, value):
        value = float(value)
        if not (-_PROBABILITY_SLACK <= value <= 1.0 + _PROBABILITY_SLACK):
            raise ValueError(f"not a probability: {value!r}")
        return super().__new__(cls, min(1.0, max(0.0, value)))


def _stirling_correction(a):
    """ln Gamma(a) - [(a - 1/2) ln a - a + ln(2 pi)/2] for a >= 10."""
    inv = 1.0 / a
    inv2 = inv * inv
    total = 0.0
    term = inv
    for c in _STIRLING:
        total += c * term
        term *= inv2
    return total


def ln_gamma(a):
    """Natural log of the Gamma function for a > 0.

    Stirling's series with argument shifting below a = 10; relative error
    is well under 1e-13 across [1e-6, 1e8].
    """
    if not (isinstance(a, (int, float)) and math.isfinite(a)) or a <= 0.0:
        raise ValueError(f"ln_gamma requires a finite positive argument, got {a!r}")
    a = float(a)
    shift = 0.0
    while a < 10.0:
        shift += math.log(a)
        a += 1.0
    return (a - 0.5) * math.log(a) - a + _HALF_LOG_TWO_PI + _stirling_correction(a) - shift


def _log1p_minus(z):
    """log1p(z) - z, evaluated without cancellation for |z| <= 1/2."""
    if abs(z) > 0.5:
        return math.log1p(z) - z
    # alternating series -z^2/2 + z^3/3 - ...
    total = 0.0
    term = z * z
    n = 2
    while True:
        delta = term / n if n % 2 == 0 else -term / n
        total -= delta
        if abs(delta) <= 1e-18 * abs(total) + 1e-320:
            return total
        term *= z
        n += 1
        if n > 200:
            return total


def _log_prefactor(a, x):
    """a ln x - x - ln Gamma(a), accurate to ~1e-15 absolute near x ~ a.

    For large a the direct form loses ~a*eps absolute accuracy to
    cancellation; rewriting through d = x - a keeps every intermediate small.
    The division remainder is recovered exactly with rational arithmetic.
    """
    if a < 30.0 or not (0.5 * a <= x <= 2.0 * a):
        if a < 30.0:
            return a * math.log(x) - x - ln_gamma(a)
        corr = -0.5 * math.log(a) + _HALF_LOG_TWO_PI + _stirling_correction(a)
        ratio = x / a
        if ratio == 0.0:  # x subnormal: x/a underflows, split the logarithm
            return a * (math.log(x) - math.log(a)) - (x - a) - corr
        return a * math.log(ratio) - (x - a) - corr
    d = x - a  # exact: x within a factor of 2 of a
    z = d / a
    r = float(Fraction(d) - Fraction(z) * Fraction(a))
    # a*log1p(d/a) - d == a*(log1p(z) - z) - r*z/(1+z) + O(r^2/a)
    smooth = a * _log1p_minus(z) - r * z / (1.0 + z)
    corr = -0.5 * math.log(a) + _HALF_LOG_TWO_PI + _stirling_correction(a)
    return smooth - corr


def _check_domain(a, x):
    if not (isinstance(a, (int, float)) and math.isfinite(a)):
        raise ValueError(f"shape parameter must be finite, got {a!r}")
    if not (MIN_SHAPE <= a <= MAX_SHAPE):
        raise ValueError(f"shape parameter {a} outside supported range [{MIN_SHAPE}, {MAX_SHAPE}]")
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or x < 0.0:
        raise ValueError(f"argument must be finite and nonnegative, got {x!r}")


def lower_series(a, x):
    """P(a, x) by the lower power series, Kahan-compensated.

    Converges for any x >= 0 but is only efficient while x is not far above
    a; dispatch normally keeps it to x < a + 1 (plus a wide-shape band).
    """
    _check_domain(a, x)
    a = float(a)
    x = float(x)
    if x == 0.0:
        return Probability(0.0)
    term = 1.0 / a
    total = term
    comp = 0.0
    ap = a
    for _ in range(MAX_ITERATIONS):
        ap += 1.0
        term *= x / ap
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) < abs(total) * REL_TOL:
            return Probability(total * math.exp(_log_prefactor(a, x)))
    raise ConvergenceError(f"lower series did not converge for a={a}, x={x}")


def upper_continued_fraction(a, x):
    """Q(a, x) = 1 - P(a, x) by Lentz's continued fraction, for x >= a + 1."""
    _check_domain(a, x)
    a = float(a)
    x = float(x)
    b = x + 1.0 - a
    c = 1.0 / TINY
    d = 1.0 / b if b != 0.0 else 1.0 / TINY
    h = d
    for i in range(1, MAX_ITERATIONS + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < REL_TOL:
            return Probability(h * math.exp(_log_prefactor(a, x)))
    raise ConvergenceError(f"continued fraction did not converge for a={a}, x={x}")


def reg_lower_gamma(a, x):
    """Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).

    Series for x < a + 1, continued fraction (as 1 - Q) otherwise. For very
    large a the series branch is kept up to x <= a + 2.5*sqrt(a): there the
    compensated series is smooth to ~1e-15, which the continued-fraction
    product is not, and that accuracy is load-bearing for the strict
    monotonicity of the band probability at a ~ 1e6.
    """
    _check_domain(a, x)
    a = float(a)
    x = float(x)
    if x == 0.0:
        return Probability(0.0)
    if x < a + 1.0 or (a >= 1e4 and x <= a + 2.5 * math.sqrt(a)):
        return lower_series(a, x)
    return Probability(1.0 - upper_continued_fraction(a, x))


def std_normal_band(kappa):
    """P{|Z| <= kappa} for a standard normal Z, via erf = P(1/2, z^2)."""
    if not (isinstance(kappa, (int, float)) and math.isfinite(kappa)) or kappa <= 0.0:
        raise ValueError(f"kappa must be finite and positive, got {kappa!r}")
    return reg_lower_gamma(0.5, 0.5 * float(kappa) ** 2)


def std_normal_cdf(z):
    """Standard normal CDF."""
    z = float(z)
    if z == 0.0:
        return Probability(0.5)
    band = reg_lower_gamma(0.5, 0.5 * z * z)
    if z > 0.0:
        return Probability(0.5 * (1.0 + band))
    return Probability(0.5 * (1.0 - band))


def log_std_normal_sf(z):
    """log P{Z > z}, usable far into the upper tail (z up to ~1e7)."""
    z = float(z)
    if z <= 2.0:
        return math.log(1.0 - std_normal_cdf(z))
    # P{Z > z} = Q(1/2, z^2/2) / 2; reuse Lentz's fraction in log space.
    a = 0.5
    x = 0.5 * z * z
    b = x + 1.0 - a
    c = 1.0 / TINY
    d = 1.0 / b
    h = d
    for i in range(1, MAX_ITERATIONS + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < REL_TOL:
            return math.log(h) + _log_prefactor(a, x) - math.log(2.0)
    raise ConvergenceError(f"normal tail fraction did not converge for z={z}")
