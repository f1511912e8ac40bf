"""Scalar kernels for tau(x, t) = (t - (t + x + 1) * (t / (1 + t))**(x + 1)) / x.

Every function here is pure and works in binary64.  The power
``(t / (1 + t))**(x + 1)`` is always formed in log space as
``exp(-(x + 1) * log1p(1 / t))`` so that it neither underflows nor loses
precision for large ``x``; near the maximiser ``t ~ 0.56 x`` the exponent
stays close to ``-1.79`` however large ``x`` gets.

Besides tau and its partial derivatives the module evaluates the auxiliary
functions used to bound the maximiser: ``h``, ``h1``, ``phi``, ``Phi``,
``Theta``, ``k`` and ``psi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UsageError

__all__ = [
    "TauPoint",
    "eval_tau",
    "eval_dtau_dt",
    "eval_d2tau_dt2",
    "eval_dtau_dx",
    "eval_k",
    "eval_psi_bound",
    "eval_aux",
    "AUX_NAMES",
    "lemma_lower_bracket",
]


@dataclass(frozen=True)
class TauPoint:
    """A point (x, t) of the domain [1, inf) x [0, inf)."""

    x: float
    t: float

    def __post_init__(self):
        x, t = float(self.x), float(self.t)
        if not (math.isfinite(x) and math.isfinite(t)):
            raise DomainError(f"non-finite point ({self.x!r}, {self.t!r})")
        if x < 1.0:
            raise DomainError(f"x must be >= 1, got {x!r}")
        if t < 0.0:
            raise DomainError(f"t must be >= 0, got {t!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "t", t)


def _point(p, t=None) -> TauPoint:
    # Accept TauPoint, an (x, t) pair, or two scalars.
    if isinstance(p, TauPoint):
        return p
    if t is None:
        x, t = p
        return TauPoint(x, t)
    return TauPoint(p, t)


def _log_ratio(t: float) -> float:
    """log(t / (1 + t)) for t > 0, accurate for large t."""
    return -math.log1p(1.0 / t)


def _ratio_pow(x: float, t: float) -> float:
    """(t / (1 + t))**(x + 1), exactly 0 at t = 0."""
    if t == 0.0:
        return 0.0
    return math.exp((x + 1.0) * _log_ratio(t))


def eval_tau(p, t=None) -> float:
    """Evaluate tau(x, t).

    Accepts a :class:`TauPoint`, an ``(x, t)`` tuple or two scalars.

    >>> eval_tau(1, 1)
    0.25
    """
    p = _point(p, t)
    x, t = p.x, p.t
    return (t - (t + x + 1.0) * _ratio_pow(x, t)) / x


def eval_dtau_dt(p, t=None) -> float:
    """Partial derivative of tau in t; returns the right limit 1/x at t = 0."""
    p = _point(p, t)
    x, t = p.x, p.t
    if t == 0.0:
        return 1.0 / x
    q = _ratio_pow(x, t)
    return (1.0 - q - (t + x + 1.0) * (x + 1.0) / (t * (1.0 + t)) * q) / x


def eval_d2tau_dt2(p, t=None) -> float:
    """Second partial derivative in t, (1+x) t^(x-1) (1+t)^(-3-x) (t-1-x)."""
    p = _point(p, t)
    x, t = p.x, p.t
    if t == 0.0:
        raise DomainError("second derivative requires t > 0")
    # t^(x-1) (1+t)^(-x-3) = (t/(1+t))^(x+1) / (t (1+t))^2
    q = _ratio_pow(x, t)
    return (1.0 + x) * q / (t * (1.0 + t)) ** 2 * (t - 1.0 - x)


def eval_dtau_dx(p, t=None) -> float:
    """Partial derivative of tau in x.

    t (-1 - t + (t/(1+t))^x (1 + t + x (1 + t + x) log(1 + 1/t))) / ((1 + t) x^2)
    """
    p = _point(p, t)
    x, t = p.x, p.t
    if t == 0.0:
        raise DomainError("d tau / dx is singular at t = 0")
    lg = math.log1p(1.0 / t)
    qx = math.exp(-x * lg)
    inner = -1.0 - t + qx * (1.0 + t + x * (1.0 + t + x) * lg)
    return t * inner / ((1.0 + t) * x * x)


def eval_k(u: float, x: float) -> float:
    """k(u) = -1 + (1+u)(1+u + x(1+u+x) log(1+1/u)) / (u(1+u) + (u+x+1)(x+1))."""
    u, x = float(u), float(x)
    if not (math.isfinite(u) and math.isfinite(x)):
        raise DomainError("k requires finite arguments")
    if u <= 0.0:
        raise DomainError(f"k requires u > 0, got {u!r}")
    if x < 1.0:
        raise DomainError(f"k requires x >= 1, got {x!r}")
    num = (1.0 + u) * (1.0 + u + x * (1.0 + u + x) * math.log1p(1.0 / u))
    den = u * (1.0 + u) + (u + x + 1.0) * (x + 1.0)
    return num / den - 1.0


def eval_psi_bound(u: float, x: float) -> float:
    """psi(u) = (x+1) u / (x^2 + (u+1)^2 + x (u+2)); alpha(x) = psi(t*(x))."""
    u, x = float(u), float(x)
    if not (math.isfinite(u) and math.isfinite(x)):
        raise DomainError("psi requires finite arguments")
    if u < 0.0:
        raise DomainError(f"psi requires u >= 0, got {u!r}")
    if x < 1.0:
        raise DomainError(f"psi requires x >= 1, got {x!r}")
    return (x + 1.0) * u / (x * x + (u + 1.0) ** 2 + x * (u + 2.0))


def lemma_lower_bracket(x: float) -> float:
    """Lower end (x+1)^2 / (2x+3) of the interval known to contain t*(x)."""
    return (x + 1.0) ** 2 / (2.0 * x + 3.0)


def _aux_h(x):
    return 1.0 - (3.0 + 1.0 / x) * _ratio_pow(x, x)


def _aux_h1(x):
    # Factor in h'(x) = -x^x (1+x)^(-1-x) h1(x).  The sign in front of the
    # log term is the one that makes this identity hold; h1 >= 0, h1 -> 0.
    return 3.0 - (1.0 + 3.0 * x) * math.log1p(1.0 / x)


def _aux_phi(x):
    # Derivative form; the expanded quotient overflows (x+2)^(2x+4) near x ~ 150.
    t = lemma_lower_bracket(x)
    q = math.exp((x + 1.0) * _log_ratio(t))
    return (1.0 - q - (t + x + 1.0) * (x + 1.0) / (t * (1.0 + t)) * q) / x


def _aux_Phi(x):
    return (
        2.0 * math.log(x + 2.0)
        + 2.0 * (x + 1.0) * math.log1p(1.0 / (x + 1.0))
        - math.log(7.0 * x * x + 21.0 * x + 16.0)
    )


_THETA_SERIES_FROM = 2.0


def _aux_Theta(x):
    if x < _THETA_SERIES_FROM:
        return 1.0 + x + x * (1.0 + 2.0 * x) * math.log1p(1.0 / x) - 3.0 * x - 1.0
    # Direct form cancels 2x against 2x; expand log1p(1/x) instead:
    # Theta = sum_{m>=1} (-1)^(m+1) m / ((m+1)(m+2)) x^-m
    total, r, m = 0.0, 1.0 / x, 1
    term_pow = r
    while True:
        term = m / ((m + 1.0) * (m + 2.0)) * term_pow
        total += term if m % 2 else -term
        if term < 1e-17 * total:
            return total
        m += 1
        term_pow *= r


_AUX = {
    "h": (_aux_h, 1.0),
    "h1": (_aux_h1, 1.0),
    "phi": (_aux_phi, 0.0),
    "Phi": (_aux_Phi, 0.0),
    "Theta": (_aux_Theta, 1.0),
}

AUX_NAMES = tuple(_AUX)


def eval_aux(name: str, x: float) -> float:
    """Evaluate one of the named auxiliary functions h, h1, phi, Phi, Theta."""
    try:
        fn, lower = _AUX[name]
    except KeyError:
        raise UsageError(
            f"unknown auxiliary function {name!r}; expected one of {AUX_NAMES}"
        ) from None
    x = float(x)
    if not math.isfinite(x) or x < lower:
        raise DomainError(f"{name} requires finite x >= {lower:g}, got {x!r}")
    if name == "phi" and x == 0.0:
        # 1/x prefactor times a bracket that also vanishes at x = 0
        raise DomainError("phi is 0/0 at x = 0; use x > 0")
    return fn(x)
