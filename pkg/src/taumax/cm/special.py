"""log-gamma and polygamma for positive real arguments.

Both kernels shift the argument upward with the recurrences
Gamma(x+1) = x Gamma(x) and psi^(k)(x+1) = psi^(k)(x) + (-1)^k k! / x^(k+1)
until it is large enough for the Stirling / asymptotic series, then sum
that series with exact Bernoulli numbers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError, UsageError

__all__ = ["lgamma", "polygamma", "digamma", "bernoulli", "K_MAX", "SHIFT_THRESHOLD"]

K_MAX = 24
SHIFT_THRESHOLD = 12.0
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
# lgamma(1+z) switches to its Taylor series for |z| below this.
_SERIES_RADIUS = 0.5
_SERIES_TERMS = 64
_MAX_TERMS = 40


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # B_m via sum_{j=0}^{m} C(m+1, j) B_j = 0, B_1 = -1/2.
    b = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * b[j]
        b.append(-acc / (m + 1))
    return tuple(b)


def bernoulli(m: int) -> Fraction:
    """Exact Bernoulli number B_m (convention B_1 = -1/2)."""
    if m < 0:
        raise DomainError("Bernoulli index must be >= 0")
    return _bernoulli_table(max(m, 2 * _MAX_TERMS + 2))[m]


@lru_cache(maxsize=None)
def _b2j(j: int) -> float:
    return float(bernoulli(2 * j))


def _check_positive(x, name):
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} requires finite x > 0, got {x!r}")
    return x


def _stirling(y: float) -> float:
    s = (y - 0.5) * math.log(y) - y + _HALF_LOG_2PI
    y2 = y * y
    p = y
    prev = math.inf
    for j in range(1, _MAX_TERMS):
        term = _b2j(j) / (2 * j * (2 * j - 1) * p)
        if abs(term) >= prev:
            break
        s += term
        if abs(term) < 1e-17 * abs(s):
            break
        prev = abs(term)
        p *= y2
    return s


@lru_cache(maxsize=None)
def _lgamma1p_coeffs() -> tuple[float, ...]:
    # lgamma(1+z) = sum_{j>=1} psi^(j-1)(1) / j! z^j
    return tuple(
        _polygamma(j - 1, 1.0) / math.factorial(j) for j in range(1, _SERIES_TERMS + 1)
    )


def _lgamma1p_series(z: float) -> float:
    total = 0.0
    zp = z
    for c in _lgamma1p_coeffs():
        term = c * zp
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
        zp *= z
    return total


def lgamma(x: float) -> float:
    """ln Gamma(x) for x > 0.

    >>> lgamma(1.0), lgamma(2.0)
    (0.0, 0.0)
    """
    x = _check_positive(x, "lgamma")
    if x == 1.0 or x == 2.0:
        return 0.0
    # Near the zeros of lgamma the shifted form cancels to absolute accuracy only.
    if x < 1.0 - _SERIES_RADIUS:
        return _lgamma1p_series(x) - math.log(x)
    if abs(x - 1.0) <= _SERIES_RADIUS:
        return _lgamma1p_series(x - 1.0)
    if abs(x - 2.0) < _SERIES_RADIUS:
        z = x - 2.0
        return _lgamma1p_series(z) + math.log1p(z)
    y, prod = x, 1.0
    while y < SHIFT_THRESHOLD:
        prod *= y
        y += 1.0
    return _stirling(y) - math.log(prod)


def _shift_point(k: int) -> float:
    # The asymptotic series for order k needs y well above k to converge
    # to full precision before its terms start to grow.
    return SHIFT_THRESHOLD + 2.0 * k


def _asymptotic(k: int, y: float) -> float:
    if k == 0:
        s = math.log(y) - 0.5 / y
        y2 = y * y
        p = y2
        prev = math.inf
        for j in range(1, _MAX_TERMS):
            term = _b2j(j) / (2 * j * p)
            if abs(term) >= prev:
                break
            s -= term
            if abs(term) < 1e-17 * abs(s):
                break
            prev = abs(term)
            p *= y2
        return s
    # (-1)^(k+1) [ (k-1)!/y^k + k!/(2 y^(k+1)) + sum B_2j (2j+k-1)! / ((2j)! y^(2j+k)) ]
    s = math.factorial(k - 1) / y**k + math.factorial(k) / (2.0 * y ** (k + 1))
    y2 = y * y
    p = y**k * y2
    prev = math.inf
    for j in range(1, _MAX_TERMS):
        term = _b2j(j) * math.factorial(2 * j + k - 1) / (math.factorial(2 * j) * p)
        if abs(term) >= prev:
            break
        s += term
        if abs(term) < 1e-17 * abs(s):
            break
        prev = abs(term)
        p *= y2
    return s if k % 2 == 1 else -s


def _polygamma(k: int, x: float) -> float:
    # No order cap: internal callers need high orders at x = 1.
    y = x
    target = _shift_point(k)
    acc = 0.0
    while y < target:
        acc += 1.0 / y ** (k + 1)
        y += 1.0
    # psi^(k)(x) = psi^(k)(y) - (-1)^k k! sum 1/(x+j)^(k+1)
    corr = math.factorial(k) * acc
    return _asymptotic(k, y) - (corr if k % 2 == 0 else -corr)


def polygamma(k: int, x: float) -> float:
    """k-th derivative of the digamma function, for 0 <= k <= K_MAX and x > 0."""
    if int(k) != k or k < 0:
        raise UsageError(f"polygamma order must be a non-negative integer, got {k!r}")
    k = int(k)
    if k > K_MAX:
        raise UsageError(f"polygamma order {k} exceeds K_MAX={K_MAX}")
    x = _check_positive(x, "polygamma")
    return _polygamma(k, x)


def digamma(x: float) -> float:
    return polygamma(0, x)
