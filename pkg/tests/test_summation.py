"""Summation primitives against independent closed forms and quadrature.

Oracles here never reuse the implementation's own route: damped
integrals are recomputed by adaptive quadrature, lattice sums by
mpmath's double-sided summation, Bernoulli closed forms by their
polynomial definitions, and tails by subtracting explicit partial sums
from exact totals.
"""

import math

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad

from vacuum1d.errors import InvalidParameter, NonConvergent
from vacuum1d.summation import (
    RAW,
    SeriesControl,
    abel_cos_integral,
    bernoulli_cos_sum,
    bernoulli_sin_sum,
    cosine_power_tail,
    lorentzian_cosine_tail,
    mittag_leffler_sum,
    poisson_check,
    riesz_cesaro2_energy_integrand,
    telescoping_check,
)

PI = math.pi


def bernoulli_b2(u: float) -> float:
    return u * u - u + 1.0 / 6.0


def bernoulli_b4(u: float) -> float:
    return u**4 - 2.0 * u**3 + u * u - 1.0 / 30.0


def cos_power_total(theta: float, power: int) -> float:
    """Exact sum_{n>=1} cos(n theta)/n^power from Bernoulli polynomials."""
    u = math.fmod(theta, 2.0 * PI) / (2.0 * PI)
    if u < 0.0:
        u += 1.0
    if power == 2:
        return PI**2 * bernoulli_b2(u)
    assert power == 4
    return -(PI**4) * bernoulli_b4(u) / 3.0


# ---------------------------------------------------------------------------
# abel_cos_integral
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "a,b,t",
    [(2.0, 0.7, 0.3), (0.5, -1.2, 1.0), (10.0, 0.0, 0.05), (1.0, 3.0, 2.0)],
)
def test_abel_cos_integral_matches_quadrature(a, b, t):
    part_delta, part_osc = abel_cos_integral(a, b, t)
    # cos(a w - b) = cos b cos(a w) + sin b sin(a w): two Fourier quads.
    ref_cos, err_cos = quad(lambda w: math.exp(-w * t), 0.0, np.inf, weight="cos", wvar=a)
    ref_sin, err_sin = quad(lambda w: math.exp(-w * t), 0.0, np.inf, weight="sin", wvar=a)
    ref = math.cos(b) * ref_cos + math.sin(b) * ref_sin
    assert part_delta + part_osc == pytest.approx(
        ref, abs=max(1e-12, 10 * (err_cos + err_sin))
    )


def test_abel_cos_integral_zero_length_is_pure_delta_part():
    part_delta, part_osc = abel_cos_integral(0.0, 0.4, 0.25)
    assert part_delta == pytest.approx(math.cos(0.4) / 0.25, rel=1e-15)
    assert part_osc == 0.0


def test_abel_cos_integral_rejects_bad_arguments():
    with pytest.raises(InvalidParameter):
        abel_cos_integral(1.0, 0.0, 0.0)
    with pytest.raises(InvalidParameter):
        abel_cos_integral(-1.0, 0.0, 0.1)


# ---------------------------------------------------------------------------
# riesz_cesaro2_energy_integrand
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "n,length,theta,omega_max",
    [(1, 1.0, 0.0, 40.0), (3, 0.7, 1.1, 25.0), (-2, 1.3, 2.5, 60.0)],
)
def test_riesz_cesaro2_matches_quadrature(n, length, theta, omega_max):
    val = riesz_cesaro2_energy_integrand(n, length, theta, omega_max)
    ref, err = quad(
        lambda w: (1.0 - w / omega_max) ** 2 * math.cos(w * n * length + n * theta) * w,
        0.0,
        omega_max,
        limit=200,
    )
    assert val == pytest.approx(ref, abs=max(1e-10, 10 * err))


def test_riesz_cesaro2_infinite_cutoff_is_the_regularized_value():
    # Only the -cos(b)/a^2 term survives Omega -> inf.
    assert riesz_cesaro2_energy_integrand(2, 1.5, 0.9, math.inf) == pytest.approx(
        -math.cos(1.8) / 9.0, rel=1e-15
    )


def test_riesz_cesaro2_converges_to_limit_as_cutoff_grows():
    # The finite-cutoff corrections decay like sin(Omega)/Omega.
    lim = riesz_cesaro2_energy_integrand(1, 1.0, 0.0, math.inf)
    devs = [
        abs(riesz_cesaro2_energy_integrand(1, 1.0, 0.0, om) - lim)
        for om in (1e2, 1e3, 1e4)
    ]
    assert devs[2] < devs[0]
    assert devs[2] < 3.0 / 1e4


def test_riesz_cesaro2_rejects_zero_winding():
    with pytest.raises(InvalidParameter):
        riesz_cesaro2_energy_integrand(0, 1.0)


# ---------------------------------------------------------------------------
# Bernoulli closed forms
# ---------------------------------------------------------------------------


def test_bernoulli_sin_sum_is_the_sawtooth():
    assert bernoulli_sin_sum(1.0) == pytest.approx((PI - 1.0) / 2.0, rel=1e-15)
    # Abel value 0 exactly at the jump, any period.
    assert bernoulli_sin_sum(0.0) == 0.0
    assert bernoulli_sin_sum(4.0 * PI) == 0.0
    # Odd about the jump and 2 pi periodic.
    z = 2.2
    assert bernoulli_sin_sum(2.0 * PI - z) == pytest.approx(-bernoulli_sin_sum(z))
    assert bernoulli_sin_sum(z + 6.0 * PI) == pytest.approx(bernoulli_sin_sum(z))


def test_bernoulli_sin_sum_matches_cesaro_partial_sums():
    # Fejer (C,1) means of the raw series converge everywhere on the circle.
    z = 0.8
    n = np.arange(1, 20001, dtype=float)
    terms = np.sin(n * z) / n
    partial = np.cumsum(terms)
    fejer = partial.mean()
    assert bernoulli_sin_sum(z) == pytest.approx(fejer, abs=1e-4)


@pytest.mark.parametrize("theta", [0.0, 0.5, PI, 4.0, 2.0 * PI - 1e-3])
def test_bernoulli_cos_sum_is_pi2_b2(theta):
    u = theta / (2.0 * PI)
    assert bernoulli_cos_sum(theta) == pytest.approx(PI**2 * bernoulli_b2(u), rel=1e-14)


def test_bernoulli_cos_sum_special_values():
    assert bernoulli_cos_sum(0.0) == pytest.approx(PI**2 / 6.0, rel=1e-15)
    assert bernoulli_cos_sum(PI) == pytest.approx(-(PI**2) / 12.0, rel=1e-15)


def test_bernoulli_cos_sum_matches_brute_force():
    theta = 1.3
    n = np.arange(1, 200001, dtype=float)
    brute = float(np.sum(np.cos(n * theta) / n**2))
    # Raw tail is O(1/N): bound via the integral envelope.
    assert bernoulli_cos_sum(theta) == pytest.approx(brute, abs=1e-4)


# ---------------------------------------------------------------------------
# Mittag-Leffler lattice sums
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("a,b", [(0.3, 0.0), (1.7, 0.25), (0.05, 0.9), (4.0, -0.4)])
def test_mittag_leffler_coth_matches_mpmath(a, b):
    ref = float(mpmath.nsum(lambda n: 1.0 / ((n + b) ** 2 + a * a), [-mpmath.inf, mpmath.inf]))
    assert mittag_leffler_sum("coth", a, b) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("a,b", [(0.3, 0.0), (1.7, 0.25), (0.6, 0.5)])
def test_mittag_leffler_csch_matches_mpmath(a, b):
    ref = float(
        mpmath.nsum(
            lambda n: (-1.0) ** n / ((n + b) ** 2 + a * a), [-mpmath.inf, mpmath.inf]
        )
    )
    assert mittag_leffler_sum("csch", a, b) == pytest.approx(ref, rel=1e-12)


def test_mittag_leffler_large_a_asymptotics():
    # Overflow guard region: coth side collapses to pi/a.
    assert mittag_leffler_sum("coth", 500.0, 0.3) == pytest.approx(PI / 500.0, rel=1e-12)


def test_mittag_leffler_rejects_bad_input():
    with pytest.raises(InvalidParameter):
        mittag_leffler_sum("coth", 0.0)
    with pytest.raises(InvalidParameter):
        mittag_leffler_sum("tanh", 1.0)


# ---------------------------------------------------------------------------
# telescoping_check
# ---------------------------------------------------------------------------


def test_telescoping_check_recovers_exact_limit():
    # sum (1/n^2 - 1/(n+1)^2) telescopes to 1.
    pairs = [(1.0 / n**2, 1.0 / (n + 1) ** 2) for n in range(1, 2001)]
    out = telescoping_check(pairs, limit_hint=1.0)
    assert out.value == pytest.approx(1.0, abs=1e-11)
    assert out.terms_used == 2000
    assert out.method_tag == RAW
    assert out.truncation_bound < 1e-10


def test_telescoping_check_rejects_divergent_series():
    pairs = [(1.0 / n, 0.0) for n in range(1, 2001)]
    with pytest.raises(NonConvergent):
        telescoping_check(pairs)


def test_telescoping_check_needs_enough_pairs():
    with pytest.raises(InvalidParameter):
        telescoping_check([(1.0, 1.0)] * 8)


# ---------------------------------------------------------------------------
# poisson_check
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("omega,x", [(7.3, 0.31), (20.1, 0.5), (3.0, 0.87)])
def test_poisson_identity_sides_agree(omega, x):
    lhs, rhs = poisson_check(omega, 1.0, x, n_orbit=5000)
    assert lhs == pytest.approx(rhs, abs=1e-3 * max(1.0, abs(lhs)))


def test_poisson_check_truncation_error_shrinks():
    devs = []
    for n_orbit in (100, 1000, 10000):
        lhs, rhs = poisson_check(11.0, 1.0, 0.4, n_orbit=n_orbit)
        devs.append(abs(lhs - rhs))
    assert devs[2] < devs[0]


def test_poisson_check_validates_domain():
    with pytest.raises(InvalidParameter):
        poisson_check(5.0, 1.0, 1.5)
    with pytest.raises(InvalidParameter):
        poisson_check(5.0, -1.0, 0.5)


# ---------------------------------------------------------------------------
# Euler-Maclaurin cosine tails
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("theta", [0.0, 0.4, 1.7, PI])
@pytest.mark.parametrize("power", [2, 4])
def test_cosine_power_tail_matches_exact_remainder(theta, power):
    a = 10001
    n = np.arange(1, a, dtype=float)
    head = float(np.sum(np.cos(n * theta) / n**power))
    exact_tail = cos_power_total(theta, power) - head
    # Documented remainder envelope of the correction ladder.
    budget = 2.0 * PI**5 / (30240.0 * a**power) + 1e-13
    assert cosine_power_tail(theta, a, power) == pytest.approx(exact_tail, abs=budget)


@pytest.mark.parametrize("theta", [0.0, 0.3, 1.0, 2.0, 3.0416, PI])
@pytest.mark.parametrize("c,a", [(0.05, 4001), (0.3, 4001), (1.0, 10001)])
def test_lorentzian_cosine_tail_error_bound_is_honest(theta, c, a):
    # Exact total from the Mittag-Leffler expansion of cosh((pi-theta)c):
    # sum_{n>=1} cos(n theta)/(n^2+c^2)
    #   = (pi/(2c)) cosh((pi-theta)c)/sinh(pi c) - 1/(2c^2).
    with mpmath.workdps(40):
        cc = mpmath.mpf(c)
        total = float(
            (mpmath.pi / (2 * cc))
            * mpmath.cosh((mpmath.pi - theta) * cc)
            / mpmath.sinh(mpmath.pi * cc)
            - 1 / (2 * cc * cc)
        )
    head = math.fsum(math.cos(n * theta) / (n * n + c * c) for n in range(1, a))
    value, bound = lorentzian_cosine_tail(theta, c, a)
    assert abs(value - (total - head)) <= bound + 5e-15


def test_lorentzian_cosine_tail_degrades_outside_expansion_range():
    # Width comparable to the start index: no expansion, crude honest bound.
    value, bound = lorentzian_cosine_tail(1.0, 50.0, 100)
    assert value == 0.0
    assert bound >= sum(1.0 / (n * n + 2500.0) for n in range(100, 100000))


def test_series_control_defaults():
    control = SeriesControl()
    assert control.max_terms == 10_000
    assert control.tol == 1e-12
    assert control.damping_t == 0.0
