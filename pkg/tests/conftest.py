import math

import mpmath
import numpy as np
import pytest

EPS = np.finfo(float).eps


def tau_direct(x, t):
    """Textbook tau with a plain power; shares no code with taumax.tau."""
    return (t - (t + x + 1.0) * (t / (1.0 + t)) ** (x + 1.0)) / x


def central_diff(f, z, h):
    return (f(z + h) - f(z - h)) / (2.0 * h)


def bisect_oracle(f, lo, hi, tol=1e-13):
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def grid_argmax(x, lo, hi, points=10**6, include_lo=False):
    g = np.linspace(lo, hi, points + (0 if include_lo else 1))
    if not include_lo:
        g = g[1:]
    v = tau_direct(x, g)
    i = int(np.argmax(v))
    return g[i], v[i], v


@pytest.fixture(autouse=True)
def _reset_mpmath_precision():
    yield
    mpmath.mp.dps = 15


# --- acceptance reporting -----------------------------------------------------

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion and assert it."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, bool(ok), detail))
        assert ok, f"criterion {number} ({title}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}" + (f" -- {detail}" if detail else ""))
