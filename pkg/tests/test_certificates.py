"""Tests for the exact sign-certificate verification chains."""

import math
import random
from fractions import Fraction

import pytest

from gamma_extremes import certificates as C
from gamma_extremes.exact_poly import RationalPoly, verify_sign_on_interval
from gamma_extremes.reference_data import V_MINUS_EVEN_COEFFS, V_PLUS_EVEN_COEFFS

# printed w-expansions of the cleared log-truncation numerators
F_PLUS_EXPECTED = 2 * RationalPoly(
    [0, -15, -135, -345, 190, 1735, 495, -3615, -716, 3615, 495, -1735, 190, 345, -135, 15]
)
H_PLUS_EXPECTED = RationalPoly(
    [0, -30, -255, -600, 410, 2900, 705, -5550, -1672, 5550, 705, -2900, 410, 600, -255, 30]
)
F_MINUS_EXPECTED = -2 * RationalPoly(
    [0, -3, 21, -33, -56, 130, 94, -130, -56, 33, 21, 3]
)
H_MINUS_EXPECTED = RationalPoly(
    [0, 6, -39, 54, 100, -200, -128, 200, 100, -54, -39, -6]
)

G_PLUS_EXPECTED = [
    -1140603, -17129046, -115786348, -468301840, -1267262160, -2427446688,
    -3393664576, -3517163008, -2715321600, -1554209280, -649507840,
    -192286720, -38154240, -4546560, -245760,
]
I_PLUS_EXPECTED = [
    -1083048, -16069911, -108024568, -435858040, -1178745360, -2259543408,
    -3165284416, -3291555328, -2553515520, -1471031040, -619724800,
    -185251840, -37171200, -4485120, -245760,
]
G_MINUS_EXPECTED = [
    128409, 2102668, 14459888, 56813056, 142035456, 236177408,
    264626176, 197525504, 94175232, 25952256, 3145728,
]
I_MINUS_EXPECTED = [
    175743, 2666962, 17644496, 67116160, 162604032, 262406144,
    286081024, 208437248, 97320960, 26345472, 3145728,
]


def _even_coeffs(report):
    return [int(c) for c in report.coefficients[::2]]


def _direct_p_q(side, w):
    """Independent big-rational evaluation of the defining formulas."""
    alpha = (1 - w ** 2) ** 2 / (4 * w ** 2)
    sign = 1 if side == "plus" else -1
    tau = 4 * w ** 2 / ((1 - w ** 2) * (1 + sign * 2 * w - w ** 2))
    eta = tau / 2
    order = 5 if side == "plus" else 4
    log_trunc = lambda x: sum(Fraction((-1) ** (k + 1), k) * x ** k for k in range(1, order + 1))
    return -1 + alpha * log_trunc(tau), Fraction(-1, 2) + alpha * log_trunc(eta)


class TestBuildPQ:
    @pytest.mark.parametrize("side", ["plus", "minus"])
    def test_matches_direct_formula(self, side):
        p, q = C.build_P_Q(side)
        for w in (Fraction(1, 10), Fraction(1, 7), Fraction(2, 9)):
            p_ref, q_ref = _direct_p_q(side, w)
            assert p.evaluate(w) == p_ref
            assert q.evaluate(w) == q_ref

    def test_invalid_side(self):
        with pytest.raises(ValueError):
            C.build_P_Q("both")

    def test_cleared_numerators_match_printed_polynomials(self):
        n_p, n_q, _ = C._cleared_numerators("plus")
        assert 15 * n_p == F_PLUS_EXPECTED
        assert 30 * n_q == H_PLUS_EXPECTED
        n_p, n_q, _ = C._cleared_numerators("minus")
        assert 3 * n_p == F_MINUS_EXPECTED
        assert 6 * n_q == H_MINUS_EXPECTED


class TestChains:
    def test_plus_chain(self):
        g_rep, i_rep, v_rep = C.verify_chain_plus(full_compare=True)
        assert g_rep.sign_verdict == "all_negative"
        assert i_rep.sign_verdict == "all_negative"
        assert v_rep.sign_verdict == "all_positive"
        assert _even_coeffs(g_rep) == G_PLUS_EXPECTED
        assert _even_coeffs(i_rep) == I_PLUS_EXPECTED
        assert _even_coeffs(v_rep) == list(V_PLUS_EVEN_COEFFS)
        assert v_rep.degree == 124
        assert int(v_rep.coefficients[0]) == 23565171557938261664962395
        assert int(v_rep.coefficients[124]) == 116733302341443256320000
        assert "R+ < 0" in v_rep.detail

    def test_minus_chain(self):
        g_rep, i_rep, v_rep = C.verify_chain_minus(full_compare=True)
        assert g_rep.sign_verdict == "all_positive"
        assert i_rep.sign_verdict == "all_positive"
        assert v_rep.sign_verdict == "all_positive"
        assert _even_coeffs(g_rep) == G_MINUS_EXPECTED
        assert _even_coeffs(i_rep) == I_MINUS_EXPECTED
        assert _even_coeffs(v_rep) == list(V_MINUS_EVEN_COEFFS)
        assert int(v_rep.coefficients[0]) == 1058023271132626023
        assert int(v_rep.coefficients[68]) == 3984496719921263149056
        assert "R- > 0" in v_rep.detail

    def test_odd_coefficients_vanish(self):
        for report in (
            C.verify_small_alpha_certificate(),
            *C.verify_chain_plus(),
            *C.verify_chain_minus(),
        ):
            assert all(c == 0 for c in report.coefficients[1::2]), report.name

    def test_spot_checks_within_degree(self):
        for report in (*C.verify_chain_plus(), *C.verify_chain_minus()):
            for check in report.spot_checks:
                assert 0 <= check.index <= report.degree
                assert check.matched

    def test_sign_verdict_recomputable(self):
        for report in (*C.verify_chain_plus(), *C.verify_chain_minus()):
            nonzero = [c for c in report.coefficients if c != 0]
            recomputed = "all_positive" if all(c > 0 for c in nonzero) else "all_negative"
            assert report.sign_verdict == recomputed


class TestSmallAlphaCertificate:
    def test_coefficients(self):
        report = C.verify_small_alpha_certificate()
        assert report.sign_verdict == "all_positive"
        assert _even_coeffs(report) == [240, 416, 152, 8, 92, 58, 3]

    def test_consistency_at_q_one(self):
        # (1+q^2)^6 I(1/(1+q^2)) at q=1 equals 2^6 I(1/2), exactly
        report = C.verify_small_alpha_certificate()
        expansion = RationalPoly(report.coefficients)
        assert expansion.evaluate(1) == 64 * C.SMALL_ALPHA_POLY.evaluate(Fraction(1, 2))


class TestCase2:
    def test_report(self):
        report = C.verify_case2_J()
        assert report.name == "case2J"
        assert "Sturm count 0" in report.detail

    def test_numerator_negative_at_zero(self):
        assert C.CASE2_NUMERATOR.evaluate(0) == -1

    def test_enclosure_is_exact(self):
        assert C._sqrt3_minus_sqrt2_below(Fraction(1, 3))
        assert not C._sqrt3_minus_sqrt2_below(Fraction(3, 10))  # sqrt3-sqrt2 > 0.3


class TestCase1:
    def test_bounds_and_samples(self):
        report = C.verify_case1_transcendental()
        assert report.derivative_bound == pytest.approx(1.746594, abs=1e-5)
        assert report.value_at_endpoint == pytest.approx(0.003095392, abs=1e-8)
        assert report.samples_checked == 1000
        assert report.all_samples_positive

    def test_phi_positive_inside_interval(self):
        # interior points of [1/(sqrt(2)+sqrt(3)), 1/(1+sqrt(2))) ~ [0.3178, 0.4142)
        for w in (0.32, 0.35, 0.41):
            phi = math.exp(1.0 - w) + w - 3.0 + 2.0 * w / (1.0 - w * w)
            assert phi > 0.0, w

    def test_phi_negative_below_interval(self):
        # positivity is genuinely interval-local: just below the left endpoint
        w = 0.3
        phi = math.exp(1.0 - w) + w - 3.0 + 2.0 * w / (1.0 - w * w)
        assert phi < 0.0


class TestScaleFactors:
    def test_positive_on_their_intervals(self):
        one_minus_w2 = RationalPoly([1, 0, -1])
        plus_quad = RationalPoly([1, 2, -1])
        minus_quad = RationalPoly([1, -2, -1])
        assert verify_sign_on_interval(one_minus_w2, 0, Fraction(1, 2), "positive")
        assert verify_sign_on_interval(plus_quad, 0, Fraction(1, 2), "positive")
        assert verify_sign_on_interval(minus_quad, 0, Fraction(1, 4), "positive")
        # endpoint of the closed interval (0, 1/4]
        assert minus_quad.evaluate(Fraction(1, 4)) > 0


class TestFloatCrossValidation:
    def test_r_signs_match_exact_conclusions(self):
        rng = random.Random(20240820)
        for _ in range(20):
            alpha = rng.uniform(1.0 + 1e-6, 100.0)
            assert C.r_plus_float(alpha) < 0.0, alpha
            if alpha >= (15.0 / 8.0) ** 2:
                assert C.r_minus_float(alpha) > 0.0, alpha


class TestReporting:
    def test_verify_all_and_formats(self):
        reports, case1 = C.verify_all()
        assert [r.name for r in reports] == [
            "smallalpha", "G+", "I+", "V+", "G-", "I-", "V-", "case2J",
        ]
        text = C.format_text(reports, case1)
        assert "V+: degree 124" in text
        assert "case1: derivative bound 1.746594" in text
        records = C.format_records(reports, case1)
        for line in records.splitlines():
            assert line.startswith("name=") and ";verdict=" in line and ";detail=" in line

    def test_verify_all_subset(self):
        reports, case1 = C.verify_all(only={"smallalpha"})
        assert [r.name for r in reports] == ["smallalpha"]
        assert case1 is None

    def test_mismatch_carries_both_values(self):
        exc = C.CertificateMismatch("X", 2, Fraction(5), Fraction(7))
        assert exc.index == 2
        assert exc.expected == 5
        assert exc.actual == 7
