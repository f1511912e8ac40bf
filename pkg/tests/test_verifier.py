import math

import mpmath as mp
import pytest

from taumax.cm.verifier import (
    DEFAULT_GRID,
    MAX_ORDER,
    check_cm,
    f_beta,
    f_beta_jet,
    scaled_margins,
)
from taumax.errors import DomainError, UsageError
from taumax.limits import limit_constants

from conftest import central_diff

EULER = 0.5772156649015329
BETA_STAR = 1 / (1 + limit_constants().alpha_star)


def f_oracle(x, beta):
    return math.exp(beta * math.log1p(x) - math.lgamma(1 + x) / x)


def test_values():
    assert f_beta(1.0, 0.5) == pytest.approx(math.sqrt(2), rel=1e-15)
    assert f_beta(0.0, 0.7) == pytest.approx(math.exp(EULER), rel=1e-15)
    assert f_beta_jet(0.0, 0.7, 4).coeffs[0] == pytest.approx(math.exp(EULER), rel=1e-15)


@pytest.mark.parametrize("x", [v for v in DEFAULT_GRID if v != 0.0] + [3.9, 4.0, 7.5])
@pytest.mark.parametrize("beta", [0.5, BETA_STAR, 1.0])
def test_low_derivatives_against_fd(x, beta):
    d = f_beta_jet(x, beta, 2).derivatives()
    assert d[0] == pytest.approx(f_oracle(x, beta), rel=1e-13)
    d1 = central_diff(lambda z: f_oracle(z, beta), x, 1e-5)
    assert d[1] == pytest.approx(d1, rel=1e-7)
    g = lambda z: f_oracle(z, beta)
    sd = lambda h: (g(x + h) - 2 * g(x) + g(x - h)) / h**2
    h = 2e-3 * (1 + x)
    d2 = (4 * sd(h / 2) - sd(h)) / 3
    assert d[2] == pytest.approx(d2, rel=1e-6)


def test_continuity_through_zero():
    j0 = f_beta_jet(0.0, BETA_STAR, 6).coeffs
    j1 = f_beta_jet(1e-7, BETA_STAR, 6).coeffs
    for a, b in zip(j0, j1):
        assert a == pytest.approx(b, rel=1e-5, abs=1e-8)


@pytest.mark.parametrize("x", [-0.9, -0.5, 0.0, 0.3, 1.0, 3.99, 4.0, 10.0, 50.0])
def test_jet_against_mpmath(x):
    mp.mp.dps = 40
    beta = mp.mpf(BETA_STAR)

    def f(z):
        if z == 0:
            return mp.exp(mp.euler)
        return mp.exp(beta * mp.log1p(z) - mp.loggamma(1 + z) / z)

    K = MAX_ORDER
    ref = mp.taylor(f, mp.mpf(x), K) if x != 0 else mp.taylor(f, mp.mpf("1e-30"), K)
    got = f_beta_jet(x, BETA_STAR, K).coeffs
    r = 1 + x
    scale = abs(float(ref[0]))
    for k in range(K + 1):
        assert abs(got[k] - float(ref[k])) * r**k <= 5e-11 * scale, k


def test_threshold_exponent_alternates():
    reps = check_cm(DEFAULT_GRID, BETA_STAR, 12)
    assert len(reps) == len(DEFAULT_GRID)
    for rep in reps:
        assert rep.all_alternating, rep
        assert rep.first_violation is None
        assert rep.min_scaled_margin > 1e-4
        assert rep.orders_checked == 13


def test_large_beta_fails():
    reps = check_cm([1.0, 5.0], 0.9, 12)
    assert not any(r.all_alternating for r in reps)
    assert all(r.first_violation == 1 for r in reps)


def test_beta_zero_passes():
    # Gamma(x+1)^(-1/x) itself is completely monotone on the grid
    assert all(r.all_alternating for r in check_cm(DEFAULT_GRID, 0.0, 10))


def test_order_zero():
    (rep,) = check_cm([2.0], BETA_STAR, 0)
    assert rep.all_alternating and rep.orders_checked == 1
    assert rep.min_margin == pytest.approx(f_beta(2.0, BETA_STAR))


def test_bad_point_recorded_not_raised():
    reps = check_cm([-1.5, 1.0], BETA_STAR, 6)
    assert reps[0].error and not reps[0].all_alternating
    assert reps[1].error is None and reps[1].all_alternating


def test_domain_and_order_errors():
    with pytest.raises(DomainError):
        f_beta(-1.0, 0.5)
    with pytest.raises(UsageError):
        f_beta_jet(1.0, 0.5, MAX_ORDER + 1)
    with pytest.raises(UsageError):
        check_cm([1.0], 0.5, -1)


def test_scaled_margins_definition():
    j = f_beta_jet(1.0, 0.5, 3)
    sm = scaled_margins(j)
    assert sm[0] == 1.0
    assert sm[2] == pytest.approx(j.coeffs[2] * 4 / j.coeffs[0])
