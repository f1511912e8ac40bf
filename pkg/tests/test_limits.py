import math

import mpmath as mp
import numpy as np
import pytest

from taumax.limits import (
    LimitConstants,
    ell_equation_residual,
    eval_eta,
    eval_eta_prime,
    limit_constants,
    solve_a0,
    solve_x0,
)
from taumax.maximizer import solve_t_star

from conftest import bisect_oracle


@pytest.fixture(scope="module")
def lc():
    return solve_x0()


def test_eta_values():
    assert eval_eta(0.0) == 0.0
    assert eval_eta(1.0) == pytest.approx(math.e - 3, rel=1e-15)
    assert eval_eta(1.0) == pytest.approx(-0.28172, abs=1e-5)
    assert eval_eta(2.0) == pytest.approx(0.38906, abs=1e-5)


def test_a0_against_bisection():
    a0 = solve_a0()
    ref = bisect_oracle(lambda a: math.exp(a) - 2 * a - 1, 1.0, 2.0, tol=1e-12)
    assert a0 == pytest.approx(ref, abs=1e-10)
    assert a0 == pytest.approx(1.2564, abs=1e-4)
    assert abs(eval_eta_prime(a0)) <= 1e-12
    assert eval_eta(a0) == pytest.approx(a0 * (1 - a0), abs=1e-14)
    assert eval_eta(a0) < 0


def test_constants_against_mpmath(lc):
    mp.mp.dps = 40
    x0 = mp.findroot(lambda a: mp.e**a - a**2 - a - 1, 1.8)
    ell = 1 / x0
    assert lc.x0 == pytest.approx(float(x0), rel=1e-15)
    assert lc.ell == pytest.approx(float(ell), rel=1e-15)
    assert lc.alpha_star == pytest.approx(float(ell / (1 + ell + ell**2)), rel=1e-15)


def test_printed_values(lc):
    assert lc.x0 == pytest.approx(1.793, abs=1e-3)
    assert abs(lc.ell - 0.5576367386) < 1e-9
    assert abs(lc.alpha_star - 0.2984256075) < 1e-9
    assert lc.alpha_star > 0.298


def test_record_invariants(lc):
    assert 1 < lc.a0 < lc.x0 < 2
    assert lc.eta_residual <= 1e-12
    assert lc.ell == 1 / lc.x0
    assert lc.alpha_star == lc.ell / (1 + lc.ell + lc.ell**2)
    assert 0.5 <= lc.ell <= 1.0
    assert abs(ell_equation_residual(lc.ell)) <= 1e-10


def test_eta_shape(lc):
    inc = [eval_eta(a) for a in np.linspace(lc.a0, 3.0, 200)]
    assert all(b > a for a, b in zip(inc, inc[1:]))
    assert all(eval_eta(a) < 0 for a in np.linspace(1.0, lc.a0, 200))


def test_limit_from_sequence_side(lc):
    # alpha_n with t_n replaced by ell * n, at n = 1e8
    n = 1e8
    t = lc.ell * n
    approx = (1 + n) * t / (n * n + (1 + t) ** 2 + n * (2 + t))
    assert abs(approx - lc.alpha_star) < 1e-7


def test_maximizer_consistency(lc):
    a = solve_t_star(1e6).alpha
    assert a < lc.alpha_star
    assert lc.alpha_star - a < 1e-5
    for x in (1.0, 2.0, 10.0, 1e3, 1e5, 1e8):
        assert solve_t_star(x).alpha < lc.alpha_star


def test_cached(lc):
    assert limit_constants() is limit_constants()
    assert limit_constants() == lc
    assert isinstance(lc, LimitConstants)
