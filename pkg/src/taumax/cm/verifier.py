"""Derivative-sign checks for f_beta(x) = (x + 1)^beta / Gamma(x + 1)^(1/x).

The order-K jet of f_beta is exp(beta * log(1 + X) - L / X) with X the
variable jet at x and L the jet of lgamma(1 + X), seeded from polygamma
values: L = lgamma(x+1) + sum_k psi^(k-1)(x+1) / k! h^k.

L / X has a removable singularity at x = 0, where the jet of
g(u) = lgamma(1+u) / u is just L seeded at center 0 (constant term exactly 0)
shifted down one place.  Elsewhere below QUADRATURE_BELOW the division L / X
would amplify rounding by roughly ((x+1)/x)^k, so the coefficients come from
g^(k)(x) = int_0^1 s^k psi^(k)(1 + s x) ds by Gauss-Legendre quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import DomainError, TaumaxError, UsageError
from . import jet as J
from .jet import TaylorJet
from .special import _polygamma, lgamma, polygamma

__all__ = [
    "CmReport",
    "f_beta",
    "f_beta_jet",
    "check_cm",
    "scaled_margins",
    "MAX_ORDER",
    "DEFAULT_GRID",
    "STRICT_FLOOR",
]

MAX_ORDER = 20
DEFAULT_GRID = (-0.5, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0)
QUADRATURE_BELOW = 4.0
# Alternation at order k counts only if (-1)^k c_k (1+x)^k / |c_0| exceeds
# this.  Jet errors are ~1e-12 relative; true scaled margins at the
# threshold exponent are ~1e-3 on the default grid.
STRICT_FLOOR = 1e-9
# The integrand's pole at s = -1/x stays >= 1.25 away from [0, 1] for
# x < 4, so 64 nodes reach full binary64 accuracy.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)
_GL_S = 0.5 * (_GL_NODES + 1.0)
_GL_W = 0.5 * _GL_WEIGHTS


@dataclass(frozen=True)
class CmReport:
    x: float
    beta: float
    orders_checked: int
    all_alternating: bool
    min_margin: float
    first_violation: Optional[int] = None
    min_scaled_margin: float = 0.0
    error: Optional[str] = None


def _check_x(x) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= -1.0:
        raise DomainError(f"f_beta requires finite x > -1, got {x!r}")
    return x


def _check_order(K) -> int:
    if int(K) != K or not 0 <= K <= MAX_ORDER:
        raise UsageError(f"jet order must be an integer in [0, {MAX_ORDER}], got {K!r}")
    return int(K)


def f_beta(x: float, beta: float) -> float:
    """Scalar value of f_beta; at x = 0 the limit exp(gamma_E)."""
    x = _check_x(x)
    if x == 0.0:
        return math.exp(-polygamma(0, 1.0))
    return math.exp(beta * math.log1p(x) - lgamma(1.0 + x) / x)


def _lgamma1p_jet(x: float, K: int) -> list[float]:
    c = [lgamma(1.0 + x)]
    for k in range(1, K + 1):
        c.append(_polygamma(k - 1, 1.0 + x) / math.factorial(k))
    return c


def _quotient_jet(x: float, K: int) -> list[float]:
    """Taylor coefficients of lgamma(1+u)/u at u = x, for x below QUADRATURE_BELOW."""
    if x == 0.0:
        return _lgamma1p_jet(0.0, K + 1)[1:]
    ys = [1.0 + s * x for s in _GL_S]
    out = []
    for k in range(K + 1):
        vals = np.array([_polygamma(k, y) for y in ys])
        out.append(float(np.dot(_GL_W, _GL_S**k * vals)) / math.factorial(k))
    return out


def f_beta_jet(x: float, beta: float, K: int) -> TaylorJet:
    """Order-K Taylor jet of f_beta at x (x > -1)."""
    x = _check_x(x)
    K = _check_order(K)
    if K == 0:
        return TaylorJet(x, (f_beta(x, beta),))
    X = TaylorJet.variable(x, K)
    if x < QUADRATURE_BELOW:
        quotient = TaylorJet(x, _quotient_jet(x, K))
    else:
        quotient = TaylorJet(x, _lgamma1p_jet(x, K)) / X
    return J.exp(beta * J.log(1.0 + X) - quotient)


def scaled_margins(j: TaylorJet) -> list[float]:
    """(-1)^k c_k (1+x)^k / |c_0|.

    f_beta is analytic in the disc |h| < 1 + x, so its Taylor coefficients
    scale like (1+x)^-k; this makes margins of different orders comparable.
    """
    r = 1.0 + j.center
    c0 = abs(j.coeffs[0])
    return [(-1) ** k * c * r**k / c0 for k, c in enumerate(j.coeffs)]


def check_cm(grid, beta: float, K: int, strict_floor: float = STRICT_FLOOR) -> list[CmReport]:
    """Check (-1)^k f_beta^(k)(x) > 0 for k = 0..K at each grid point.

    An order passes when its scaled margin exceeds ``strict_floor``; pass 0
    for a bare sign test.  ``min_margin`` is the raw smallest
    (-1)^k f^(k)(x).  A failure at one grid point (bad domain, jet error) is
    recorded in that point's report and does not stop the batch.
    """
    K = _check_order(K)
    reports = []
    for x in grid:
        try:
            j = f_beta_jet(x, beta, K)
        except TaumaxError as exc:
            reports.append(
                CmReport(
                    x=float(x),
                    beta=float(beta),
                    orders_checked=K + 1,
                    all_alternating=False,
                    min_margin=0.0,
                    first_violation=0,
                    error=str(exc),
                )
            )
            continue
        m = [(-1) ** k * d for k, d in enumerate(j.derivatives())]
        sm = scaled_margins(j)
        bad = next(
            (k for k, (v, w) in enumerate(zip(m, sm)) if not (v > 0.0 and w > strict_floor)),
            None,
        )
        reports.append(
            CmReport(
                x=float(x),
                beta=float(beta),
                orders_checked=K + 1,
                all_alternating=bad is None,
                min_margin=max(0.0, min(m)),
                first_violation=bad,
                min_scaled_margin=min(sm),
            )
        )
    return reports
