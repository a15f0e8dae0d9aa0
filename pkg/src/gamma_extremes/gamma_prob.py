"""Probability functions of the Gamma distribution under study.

h(kappa, alpha) is the chance that a Gamma(alpha, 1) variable falls at or
below kappa times its mean; t(alpha) and band(...) are the probabilities of
the symmetric kappa-standard-deviation window around the mean. Both reduce
to the regularized incomplete gamma and are scale-free in beta.
"""

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .specfun import Probability, reg_lower_gamma

__all__ = [
    "GammaParams",
    "Kappa",
    "QuadratureError",
    "h",
    "g",
    "t",
    "band",
    "step_monotone_integral",
]


class QuadratureError(ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


@dataclass(frozen=True)
class GammaParams:
    """Shape/scale parameter pair of a Gamma distribution."""

    alpha: float
    beta: float = 1.0

    def __post_init__(self):
        for name, value in (("alpha", self.alpha), ("beta", self.beta)):
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be finite and positive, got {value!r}")

    @property
    def mean(self):
        return self.alpha * self.beta

    @property
    def variance(self):
        return self.alpha * self.beta ** 2


class Kappa(float):
    """A positive finite multiplier of the mean or standard deviation."""

    def __new__(cls, value):
        value = float(value)
        if not (math.isfinite(value) and value > 0.0):
            raise ValueError(f"kappa must be finite and positive, got {value!r}")
        return super().__new__(cls, value)


def h(kappa, alpha):
    """P{X <= kappa * E[X]} for X ~ Gamma(alpha, 1)."""
    kappa = Kappa(kappa)
    return reg_lower_gamma(alpha, kappa * alpha)


def g(kappa, params):
    """P{X <= kappa * E[X]} for X ~ Gamma(alpha, beta); beta drops out."""
    return h(kappa, params.alpha)


def _band_shape(alpha, kappa):
    """P{|X - alpha| <= kappa*sqrt(alpha)} for X ~ Gamma(alpha, 1)."""
    half_width = kappa * math.sqrt(alpha)
    upper = reg_lower_gamma(alpha, alpha + half_width)
    if alpha <= kappa * kappa:
        # lower endpoint clamps to 0 exactly
        return Probability(upper)
    lower = reg_lower_gamma(alpha, alpha - half_width)
    return Probability(upper - lower)


def t(alpha):
    """One-standard-deviation band probability of Gamma(alpha, 1)."""
    return _band_shape(float(alpha), 1.0)


def band(params, kappa):
    """P{|X - E[X]| <= kappa * sqrt(Var X)}; independent of the scale beta."""
    return _band_shape(params.alpha, float(Kappa(kappa)))


def step_monotone_integral(kappa, alpha):
    """integral_0^1 kappa (1 + w/alpha)^alpha e^(-kappa w) dw.

    The integrand is exponentiated from logs so it stays stable for very
    large alpha, where (1 + w/alpha)^alpha ~ e^w. A value < 1 certifies the
    one-step decrease of h(kappa, .) at this alpha.
    """
    kappa = Kappa(kappa)
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0.0):
        raise ValueError(f"alpha must be finite and positive, got {alpha!r}")
    log_kappa = math.log(kappa)

    def integrand(w):
        return math.exp(alpha * math.log1p(w / alpha) - kappa * w + log_kappa)

    value, abserr = quad(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12)
    if abserr > 1e-10:
        raise QuadratureError(
            f"quadrature error estimate {abserr} exceeds 1e-10 for kappa={float(kappa)}, alpha={alpha}"
        )
    return value
