"""Exact verification of the sign certificates behind the band-probability
monotonicity proof.

Every certificate is rebuilt from its defining formulas (the Taylor-
truncated log terms, the w-parametrized shape variable, the clearing
factors and the final rational substitution in q), never transcribed from
the printed expansions. The printed values enter only as spot-check
expectations: constant term, q^2 term, and top term by default, the full
coefficient lists behind the full_compare flag.
"""

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .exact_poly import (
    RationalFunction,
    RationalPoly,
    verify_sign_on_interval,
)
from .reference_data import V_MINUS_EVEN_COEFFS, V_PLUS_EVEN_COEFFS

__all__ = [
    "CertificateReport",
    "SpotCheck",
    "Case1Report",
    "CertificateMismatch",
    "SignViolation",
    "NumericMismatch",
    "build_P_Q",
    "verify_chain_plus",
    "verify_chain_minus",
    "verify_small_alpha_certificate",
    "verify_case2_J",
    "verify_case1_transcendental",
    "verify_all",
    "format_text",
    "format_records",
    "r_plus_float",
    "r_minus_float",
]

_W = RationalPoly([0, 1])
_ONE = RationalPoly.one()
_ONE_MINUS_W2 = RationalPoly([1, 0, -1])
_PLUS_QUAD = RationalPoly([1, 2, -1])   # 1 + 2w - w^2
_MINUS_QUAD = RationalPoly([1, -2, -1])  # 1 - 2w - w^2
_ONE_PLUS_Q2 = RationalPoly([1, 0, 1])


class CertificateMismatch(Exception):
    """A recomputed coefficient disagrees with its printed expectation."""

    def __init__(self, name, index, expected, actual):
        self.name = name
        self.index = index
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"{name}: coefficient of q^{index} is {actual}, expected {expected}"
        )


class SignViolation(Exception):
    """A certificate's coefficients do not all share the claimed sign."""


class NumericMismatch(Exception):
    """A high-precision numeric check missed its published value."""


@dataclass(frozen=True)
class SpotCheck:
    index: int
    expected: Fraction
    actual: Fraction
    matched: bool


@dataclass(frozen=True)
class CertificateReport:
    name: str
    degree: int
    coefficients: tuple
    sign_verdict: str
    spot_checks: tuple
    elapsed: float
    detail: str = ""


@dataclass(frozen=True)
class Case1Report:
    derivative_bound: float
    value_at_endpoint: float
    samples_checked: int
    all_samples_positive: bool
    elapsed: float


def _side_pieces(side):
    if side == "plus":
        return _PLUS_QUAD, 5
    if side == "minus":
        return _MINUS_QUAD, 4
    raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")


def _cleared_numerators(side):
    """Polynomial numerators (N_P, N_Q) of P and Q over the denominator D.

    With alpha = (1-w^2)^2/(4w^2) and tau = 4w^2/((1-w^2)*quad), each term
    alpha * tau^k / k collapses to 4^(k-1) w^(2k-2) (1-w^2)^(2-k) / (k quad^k),
    so D = (1-w^2)^(order-2) quad^order clears the whole truncated log sum.
    Working over this fixed denominator keeps the entire chain inside the
    polynomial ring: no gcd normalization is ever needed.
    """
    quad, order = _side_pieces(side)
    d = _ONE_MINUS_W2 ** (order - 2) * quad ** order
    n_p = -d
    n_q = d * Fraction(-1, 2)
    for k in range(1, order + 1):
        shared = (
            _W ** (2 * k - 2)
            * _ONE_MINUS_W2 ** (order - k)
            * quad ** (order - k)
        )
        coeff = Fraction((-1) ** (k + 1) * 4 ** (k - 1), k)
        n_p = n_p + shared * coeff
        n_q = n_q + shared * (coeff / 2 ** k)
    return n_p, n_q, d


def build_P_Q(side):
    """The two truncated log-exponents as exact rational functions of w.

    P = -1 + alpha * [tau - tau^2/2 + ...], Q = -1/2 + alpha * [same in
    tau/2]; truncation order 5 on the plus side and 4 on the minus side.
    The minus-side tau^3 term is taken in tau_minus (the tau_plus appearing
    at that spot in one displayed equation is treated as a typo,
    consistently with the explicit minus-side definitions).
    """
    n_p, n_q, d = _cleared_numerators(side)
    return RationalFunction(n_p, d), RationalFunction(n_q, d)


def _exp_taylor_cleared(numer, denom, order):
    """Numerator of 1 + x + ... + x^order/order! over denom^order, x=numer/denom."""
    total = RationalPoly.zero()
    fact = 1
    for k in range(order + 1):
        if k > 0:
            fact *= k
        total = total + numer ** k * denom ** (order - k) * Fraction(1, fact)
    return total


def _r_numerator(side):
    """Numerator of the exp-truncated combination over D^exp_order.

    R = (1 +- 4w) expT(P) + 2 expT(Q) - 3 with exp truncation order 4 on
    the plus side and 3 on the minus side; R vanishes to third order at
    w = 0, so the numerator is divisible by w^3.
    """
    n_p, n_q, d = _cleared_numerators(side)
    if side == "plus":
        linear = RationalPoly([1, 4])
        exp_order = 4
    else:
        linear = RationalPoly([1, -4])
        exp_order = 3
    num = (
        linear * _exp_taylor_cleared(n_p, d, exp_order)
        + 2 * _exp_taylor_cleared(n_q, d, exp_order)
        - 3 * d ** exp_order
    )
    return num, exp_order


def _q_expansion(poly_w, factor_power, outer_constant, den_constant):
    """outer_constant (1+q^2)^factor_power * poly_w at w = 1/(den_constant (1+q^2)).

    Requires factor_power >= deg(poly_w), so the substituted denominator
    (den_constant (1+q^2))^deg cancels into the prefactor exactly and the
    result is a polynomial in q.
    """
    n = poly_w.degree
    if factor_power < n:
        raise ValueError(f"(1+q^2) power {factor_power} below degree {n}")
    # Horner with sub_num = 1: acc <- acc + base^j * c_j
    base = den_constant * _ONE_PLUS_Q2
    acc = RationalPoly([poly_w.coeffs[-1]])
    den_power = _ONE
    for c in reversed(poly_w.coeffs[:-1]):
        den_power = den_power * base
        acc = acc + den_power * c
    scale = Fraction(outer_constant, den_constant ** n)
    return acc * _ONE_PLUS_Q2 ** (factor_power - n) * scale


def _sign_verdict(coeffs):
    nonzero = [c for c in coeffs if c != 0]
    if nonzero and all(c > 0 for c in nonzero):
        return "all_positive"
    if nonzero and all(c < 0 for c in nonzero):
        return "all_negative"
    return "mixed"


def _make_report(name, poly, expected_verdict, expected_spots, start, detail="",
                 full_compare_coeffs=None):
    coeffs = poly.coeffs
    verdict = _sign_verdict(coeffs)
    spots = []
    for index, expected in expected_spots:
        actual = coeffs[index] if index <= poly.degree else Fraction(0)
        matched = actual == expected
        spots.append(SpotCheck(index, Fraction(expected), actual, matched))
        if not matched:
            raise CertificateMismatch(name, index, expected, actual)
    if full_compare_coeffs is not None:
        expected_full = [Fraction(0)] * (poly.degree + 1)
        for i, c in enumerate(full_compare_coeffs):
            expected_full[2 * i] = Fraction(c)
        for index, (got, want) in enumerate(zip(coeffs, expected_full)):
            if got != want:
                raise CertificateMismatch(name, index, want, got)
    if verdict != expected_verdict:
        raise SignViolation(f"{name}: sign verdict {verdict}, expected {expected_verdict}")
    return CertificateReport(
        name=name,
        degree=poly.degree,
        coefficients=coeffs,
        sign_verdict=verdict,
        spot_checks=tuple(spots),
        elapsed=time.perf_counter() - start,
        detail=detail,
    )


def _verify_chain(side, full_compare):
    if side == "plus":
        f_scale = 15
        h_scale = 30
        g_const, g_power = 16384, 14
        i_const, i_power = 8192, 14
        l_const = 9720000
        v_const = -(2 ** 54)
        v_power = 62
        sub_den = 2  # w = 1/(2(1+q^2))
        sign = "all_negative"
        v_sign = "all_positive"
        spots = {
            "G+": [(0, -1140603), (2, -17129046), (28, -245760)],
            "I+": [(0, -1083048), (2, -16069911), (28, -245760)],
            "V+": [
                (0, 23565171557938261664962395),
                (2, 1985238765536369188253388462),
                (124, 116733302341443256320000),
            ],
        }
        names = ("G+", "I+", "V+")
        v_reference = V_PLUS_EVEN_COEFFS
        implication = (
            "V+ all_positive forces R+ < 0 on 0 < w < 1/2: "
            "V+ = -(2^54) (1+q^2)^62 L+ with (1+q^2)^62 > 0, so L+ < 0; "
            "L+ = 9720000 (1-w^2)^12 (1+2w-w^2)^20 w^-3 R+ with a strictly "
            "positive scale there, so R+ < 0."
        )
        detail_g = "all coefficients negative, so the order-5 log truncation exponent is negative"
    else:
        f_scale = 3
        h_scale = 6
        g_const, g_power = 1048576, 10
        i_const, i_power = 524288, 10
        l_const = -648
        v_const = -(2 ** 63)
        v_power = 34
        sub_den = 4  # w = 1/(4(1+q^2))
        sign = "all_positive"
        v_sign = "all_positive"
        spots = {
            "G-": [(0, 128409), (2, 2102668), (20, 3145728)],
            "I-": [(0, 175743), (2, 2666962), (20, 3145728)],
            "V-": [
                (0, 1058023271132626023),
                (2, 51541890229923566472),
                (68, 3984496719921263149056),
            ],
        }
        names = ("G-", "I-", "V-")
        v_reference = V_MINUS_EVEN_COEFFS
        implication = (
            "V- all_positive forces R- > 0 on 0 < w <= 1/4: "
            "V- = -(2^63) (1+q^2)^34 L- with (1+q^2)^34 > 0, so L- < 0; "
            "L- = -648 (1-w^2)^6 (1-2w-w^2)^12 w^-3 R- with a strictly "
            "negative total scale there, so R- > 0. "
            "Assumes the tau^3 term of the minus-side exponent is in tau_minus."
        )
        detail_g = "all coefficients positive, so the order-4 log truncation exponent is positive"

    reports = []
    n_p, n_q, _ = _cleared_numerators(side)

    start = time.perf_counter()
    f_poly = f_scale * n_p  # F = scale * D * P with the D already cleared
    g_core = f_poly.shift_down(1) * Fraction(1, 2)  # F / (2w)
    g_poly = _q_expansion(g_core, g_power, g_const, sub_den)
    reports.append(_make_report(names[0], g_poly, sign, spots[names[0]], start, detail_g))

    start = time.perf_counter()
    h_poly = h_scale * n_q
    i_core = h_poly.shift_down(1)  # H / w
    i_poly = _q_expansion(i_core, i_power, i_const, sub_den)
    reports.append(_make_report(names[1], i_poly, sign, spots[names[1]], start, detail_g))

    start = time.perf_counter()
    r_num, _ = _r_numerator(side)
    # the clearing factor (1-w^2)^a quad^b of L equals D^exp_order exactly,
    # so L reduces to l_const * (R numerator) / w^3
    l_poly = (l_const * r_num).shift_down(3)
    v_poly = _q_expansion(l_poly, v_power, v_const, sub_den)
    reports.append(_make_report(
        names[2], v_poly, v_sign, spots[names[2]], start, implication,
        full_compare_coeffs=v_reference if full_compare else None,
    ))
    return reports


def verify_chain_plus(full_compare=False):
    """Rebuild and check G+, I+ and V+ against their printed expansions."""
    return _verify_chain("plus", full_compare)


def verify_chain_minus(full_compare=False):
    """Rebuild and check G-, I- and V- against their printed expansions."""
    return _verify_chain("minus", full_compare)


# the degree-6 small-shape certificate and its printed q-expansion
SMALL_ALPHA_POLY = RationalPoly([3, 40, -153, 160, 145, 40, 5])
_SMALL_ALPHA_EXPECTED = [240, 416, 152, 8, 92, 58, 3]


def verify_small_alpha_certificate():
    """(1+q^2)^6 * I under w = 1/(1+q^2): all seven even coefficients."""
    start = time.perf_counter()
    poly = _q_expansion(SMALL_ALPHA_POLY, 6, 1, 1)
    spots = [(2 * i, c) for i, c in enumerate(_SMALL_ALPHA_EXPECTED)]
    return _make_report(
        "smallalpha", poly, "all_positive", spots, start,
        detail="positivity of the degree-6 band comparison polynomial on 0 < w < 1",
    )


# numerator of the degree-6 comparison quantity J = numerator / (24 w)
CASE2_NUMERATOR = RationalPoly([-1, 1, 9, 38, -31, 9, -1])
_CASE2_FLOAT_BOUND = 0.1723633


def _sqrt3_minus_sqrt2_below(bound):
    """Exact check sqrt(3) - sqrt(2) < bound for rational bound in (0, 1)."""
    bound = Fraction(bound)
    # sqrt(3) < bound + sqrt(2)  <=>  3 - bound^2 - 2 < 2*bound*sqrt(2)
    lhs = 1 - bound * bound
    if lhs <= 0:
        return True
    return lhs * lhs < 8 * bound * bound


def verify_case2_J():
    """Positivity of the J numerator on the rational superinterval (1/4, 1/3)."""
    start = time.perf_counter()
    lo, hi = Fraction(1, 4), Fraction(1, 3)
    if not _sqrt3_minus_sqrt2_below(hi):
        raise SignViolation("rational superinterval does not enclose sqrt(3)-sqrt(2)")
    if not verify_sign_on_interval(CASE2_NUMERATOR, lo, hi, "positive"):
        raise SignViolation("J numerator is not positive on (1/4, 1/3)")
    at_quarter = CASE2_NUMERATOR.evaluate_float(0.25)
    if at_quarter < _CASE2_FLOAT_BOUND - 1e-6:
        raise NumericMismatch(
            f"J numerator at w=1/4 is {at_quarter}, below {_CASE2_FLOAT_BOUND}"
        )
    spots = [SpotCheck(0, Fraction(-1), CASE2_NUMERATOR.coeffs[0], True)]
    return CertificateReport(
        name="case2J",
        degree=CASE2_NUMERATOR.degree,
        coefficients=CASE2_NUMERATOR.coeffs,
        sign_verdict="mixed",
        spot_checks=tuple(spots),
        elapsed=time.perf_counter() - start,
        detail=(
            "Sturm count 0 on (1/4, 1/3) which encloses (1/4, sqrt(3)-sqrt(2)); "
            f"value at w=1/4 is {at_quarter:.7f} >= {_CASE2_FLOAT_BOUND}"
        ),
    )


_CASE1_DERIVATIVE_BOUND = 1.746594
_CASE1_VALUE_BOUND = 0.003095392


def verify_case1_transcendental(samples=1000):
    """High-precision checks of the two transcendental bounds for 1 < alpha <= 2."""
    start = time.perf_counter()
    with mpmath.workdps(50):
        xi = 1 / (mpmath.sqrt(2) + mpmath.sqrt(3))
        derivative = -mpmath.e ** (1 - xi) + 1 + 2 * (1 + xi ** 2) / (1 - xi ** 2) ** 2
        value = mpmath.e ** (1 - xi) + xi - 3 + 2 * xi / (1 - xi ** 2)
        if abs(derivative - _CASE1_DERIVATIVE_BOUND) > 1e-5:
            raise NumericMismatch(
                f"derivative bound {mpmath.nstr(derivative, 10)} != {_CASE1_DERIVATIVE_BOUND}"
            )
        if abs(value - _CASE1_VALUE_BOUND) > 1e-8:
            raise NumericMismatch(
                f"value bound {mpmath.nstr(value, 10)} != {_CASE1_VALUE_BOUND}"
            )
        hi = 1 / (1 + mpmath.sqrt(2))
        all_positive = True
        for i in range(samples):
            w = xi + (hi - xi) * Fraction(i, samples)
            phi = mpmath.e ** (1 - w) + w - 3 + 2 * w / (1 - w ** 2)
            if phi <= 0:
                all_positive = False
                break
        if not all_positive:
            raise NumericMismatch("phi(w) not positive on the sampled interval")
        return Case1Report(
            derivative_bound=float(derivative),
            value_at_endpoint=float(value),
            samples_checked=samples,
            all_samples_positive=all_positive,
            elapsed=time.perf_counter() - start,
        )


def verify_all(full_compare=False, only=None):
    """Run every certificate; returns (reports, case1_report)."""
    runners = {
        "smallalpha": lambda: [verify_small_alpha_certificate()],
        "chain_plus": lambda: verify_chain_plus(full_compare),
        "chain_minus": lambda: verify_chain_minus(full_compare),
        "case2": lambda: [verify_case2_J()],
    }
    selected = list(runners) if only is None else [k for k in runners if k in only]
    reports = []
    for key in selected:
        reports.extend(runners[key]())
    case1 = None
    if only is None or "case1" in only:
        case1 = verify_case1_transcendental()
    return reports, case1


def format_text(reports, case1=None):
    lines = []
    for r in reports:
        lines.append(f"{r.name}: degree {r.degree}, verdict {r.sign_verdict} ({r.elapsed:.3f}s)")
        for s in r.spot_checks:
            status = "ok" if s.matched else "MISMATCH"
            lines.append(f"  q^{s.index}: {s.actual} [{status}]")
        if r.detail:
            lines.append(f"  {r.detail}")
    if case1 is not None:
        lines.append(
            f"case1: derivative bound {case1.derivative_bound:.6f}, "
            f"value {case1.value_at_endpoint:.9f}, "
            f"{case1.samples_checked} samples positive ({case1.elapsed:.3f}s)"
        )
    return "\n".join(lines)


def format_records(reports, case1=None):
    lines = []
    for r in reports:
        spot = ",".join(f"q^{s.index}={'ok' if s.matched else 'mismatch'}" for s in r.spot_checks)
        lines.append(f"name={r.name};verdict={r.sign_verdict};detail=degree {r.degree}; {spot}")
    if case1 is not None:
        lines.append(
            "name=case1;verdict=pass;detail="
            f"derivative={case1.derivative_bound:.6f} value={case1.value_at_endpoint:.9f} "
            f"samples={case1.samples_checked}"
        )
    return "\n".join(lines)


def _p_q_float(side, alpha):
    """Float evaluation of the truncated exponents from their definitions."""
    sqrt_a = math.sqrt(alpha)
    tau = 1.0 / (alpha + sqrt_a) if side == "plus" else 1.0 / (alpha - sqrt_a)
    eta = tau / 2.0
    order = 5 if side == "plus" else 4
    def trunc(x):
        return sum((-1) ** (k + 1) * x ** k / k for k in range(1, order + 1))
    return -1.0 + alpha * trunc(tau), -0.5 + alpha * trunc(eta)


def r_plus_float(alpha):
    """Direct float evaluation of the plus-side combination (alpha > 1)."""
    p, q = _p_q_float("plus", alpha)
    w = math.sqrt(alpha + 1) - math.sqrt(alpha)
    expt = lambda x: sum(x ** k / math.factorial(k) for k in range(5))
    return (1 + 4 * w) * expt(p) + 2 * expt(q) - 3


def r_minus_float(alpha):
    """Direct float evaluation of the minus-side combination (alpha >= (15/8)^2)."""
    p, q = _p_q_float("minus", alpha)
    w = math.sqrt(alpha + 1) - math.sqrt(alpha)
    expt = lambda x: sum(x ** k / math.factorial(k) for k in range(4))
    return (1 - 4 * w) * expt(p) + 2 * expt(q) - 3
