"""Half-line nonnegativity tests for cubics and quadratics.

The exact cubic test is cross-checked against the dense grid minimiser on
its Cauchy-bounded interval; the sufficient test must never certify where
the exact one refuses.
"""

import math

import numpy as np
import pytest

from copos import (CubicCoeffs, QuadCoeffs, cubic_min_bruteforce,
                   cubic_nonneg_exact, cubic_nonneg_sufficient,
                   quad_min_bruteforce, quad_nonneg)

POWERS_OF_TWO = (0.03125, 0.25, 0.5, 2.0, 8.0, 128.0)


# ---------------------------------------------------------------------------
# cubic exact

def test_cubic_exact_all_nonneg():
    assert cubic_nonneg_exact(CubicCoeffs(1, 1, 1, 1))


def test_cubic_exact_rejects_shifted_cube():
    # P = (t-1)^3 is negative on [0, 1)
    assert not cubic_nonneg_exact(CubicCoeffs(1, -3, 3, -1))


def test_cubic_exact_discriminant_branch():
    # P = (t-1)^2 (t+1): nonnegative on t >= 0 with a double root,
    # discriminant combination exactly 0
    cc = CubicCoeffs(1, -1, -1, 1)
    assert cubic_nonneg_exact(cc)
    a, b, c, d = cc
    disc = 4*a*c**3 + 4*b**3*d + 27*a*a*d*d - 18*a*b*c*d - b*b*c*c
    assert disc == 0.0
    assert cubic_min_bruteforce(cc).min_value >= 0.0


def test_cubic_exact_degenerate_leading_and_constant():
    # a = d = 0 leaves only the all-nonnegative system
    assert cubic_nonneg_exact(CubicCoeffs(0, 1, 1, 0))
    assert not cubic_nonneg_exact(CubicCoeffs(0, -1, 1, 0))
    # P = -t^2 + t is positive on (0,1) but negative beyond
    assert not cubic_nonneg_exact(CubicCoeffs(0, -1, 1, 0))


def test_cubic_exact_negative_endpoint_values():
    assert not cubic_nonneg_exact(CubicCoeffs(-1, 0, 0, 1))   # a < 0
    assert not cubic_nonneg_exact(CubicCoeffs(1, 0, 0, -1))   # P(0) < 0


# ---------------------------------------------------------------------------
# cubic sufficient

def test_cubic_sufficient_boundary():
    # sqrt(ad) = 1, both thresholds -1, met with equality
    assert cubic_nonneg_sufficient(CubicCoeffs(1, -1, -1, 1))


def test_cubic_sufficient_zero():
    assert cubic_nonneg_sufficient(CubicCoeffs(0, 0, 0, 0))


def test_cubic_sufficient_below_threshold():
    assert not cubic_nonneg_sufficient(CubicCoeffs(1, -1.01, 0, 1))


def test_cubic_sufficient_implies_exact():
    rng = np.random.default_rng(101)
    certified = 0
    for _ in range(10_000):
        cc = CubicCoeffs(*rng.uniform(-2, 2, size=4))
        if cubic_nonneg_sufficient(cc):
            certified += 1
            assert cubic_nonneg_exact(cc)
    assert certified > 100  # the sweep actually exercises the implication


# ---------------------------------------------------------------------------
# quadratic

def test_quad_perfect_square():
    assert quad_nonneg(QuadCoeffs(1, -2, 1))


def test_quad_below_threshold():
    assert not quad_nonneg(QuadCoeffs(1, -2.1, 1))


def test_quad_linear_ramp():
    assert quad_nonneg(QuadCoeffs(0, 1, 0))


def test_quad_sign_preconditions():
    assert not quad_nonneg(QuadCoeffs(-1, 0, 1))
    assert not quad_nonneg(QuadCoeffs(1, 0, -1))
    assert not quad_nonneg(QuadCoeffs(0, -1, 1))  # -t + 1 < 0 past t=1


# ---------------------------------------------------------------------------
# input validation

@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_nonfinite_coefficients_rejected(bad):
    with pytest.raises(ValueError):
        cubic_nonneg_exact(CubicCoeffs(1, bad, 0, 1))
    with pytest.raises(ValueError):
        cubic_nonneg_sufficient(CubicCoeffs(bad, 0, 0, 1))
    with pytest.raises(ValueError):
        quad_nonneg(QuadCoeffs(1, bad, 1))


def test_wrong_arity_rejected():
    with pytest.raises(ValueError):
        cubic_nonneg_exact((1.0, 2.0, 3.0))
    with pytest.raises(ValueError):
        quad_nonneg((1.0, 2.0, 3.0, 4.0))


# ---------------------------------------------------------------------------
# brute-force grid

def test_grid_min_constant_at_zero():
    got = cubic_min_bruteforce(CubicCoeffs(1, 0, 0, 0))
    assert got.min_value == 0.0
    assert got.argmin == 0.0
    assert not got.negative_at_infinity


def test_grid_min_monotone_cubic():
    # P = (t-1)^3 is increasing, so the endpoint t=0 carries the minimum
    got = cubic_min_bruteforce(CubicCoeffs(1, -3, 3, -1))
    assert got.min_value == -1.0
    assert got.argmin == 0.0


def test_grid_min_flags_negative_leading():
    got = cubic_min_bruteforce(CubicCoeffs(0, 0, -1, 0))
    assert got.negative_at_infinity
    assert got.min_value < 0.0


def test_grid_min_all_zero():
    got = cubic_min_bruteforce(CubicCoeffs(0, 0, 0, 0))
    assert got == (0.0, 0.0, False)


def test_grid_min_needs_two_points():
    with pytest.raises(ValueError):
        cubic_min_bruteforce(CubicCoeffs(1, 0, 0, 0), grid_points=1)


def test_quad_grid_min_matches_vertex():
    got = quad_min_bruteforce(QuadCoeffs(1, -2, 1))
    assert abs(got.min_value) < 1e-6  # vertex at t=1 inside [0, 3]
    assert abs(got.argmin - 1.0) < 1e-3


def test_cubic_exact_agrees_with_grid():
    rng = np.random.default_rng(202)
    checked = 0
    for _ in range(1500):
        cc = CubicCoeffs(*rng.uniform(-2, 2, size=4))
        got = cubic_min_bruteforce(cc)
        eps = 1e-9 * (1.0 + max(abs(v) for v in cc))
        if abs(got.min_value) <= eps:
            continue  # inside the band: the grid cannot call the sign
        assert cubic_nonneg_exact(cc) == (got.min_value >= -eps)
        checked += 1
    assert checked > 1000


def test_quad_agrees_with_grid():
    rng = np.random.default_rng(303)
    for _ in range(1500):
        qc = QuadCoeffs(*rng.uniform(-2, 2, size=3))
        if qc.alpha <= 0:
            continue  # the agreement contract is stated for alpha > 0
        got = quad_min_bruteforce(qc)
        eps = 1e-9 * (1.0 + max(abs(v) for v in qc))
        if abs(got.min_value) <= eps:
            continue
        assert quad_nonneg(qc) == (got.min_value >= -eps)


# ---------------------------------------------------------------------------
# positive scaling

def test_deciders_invariant_under_positive_scaling():
    # powers of two scale floats exactly, so the verdicts must be identical
    rng = np.random.default_rng(404)
    for _ in range(500):
        cc = CubicCoeffs(*rng.uniform(-2, 2, size=4))
        qc = QuadCoeffs(*rng.uniform(-2, 2, size=3))
        for c in POWERS_OF_TWO:
            scaled_cc = CubicCoeffs(*(c * v for v in cc))
            scaled_qc = QuadCoeffs(*(c * v for v in qc))
            assert cubic_nonneg_exact(scaled_cc) == cubic_nonneg_exact(cc)
            assert cubic_nonneg_sufficient(scaled_cc) == cubic_nonneg_sufficient(cc)
            assert quad_nonneg(scaled_qc) == quad_nonneg(qc)
