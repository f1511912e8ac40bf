"""Per-x maximisation of t -> tau(x, t).

For fixed x >= 1 the derivative d tau / dt is strictly decreasing on
(0, x + 1) and changes sign inside the closed interval
[(x+1)^2 / (2x+3), x], so the maximiser t*(x) is the unique root of
d tau / dt there.  At x = 1 the root sits exactly on the upper end, t* = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SolverError
from .roots import SolverConfig, newton_bisect
from .tau import eval_d2tau_dt2, eval_dtau_dt, eval_tau, lemma_lower_bracket

__all__ = ["CriticalPoint", "SolverConfig", "solve_t_star", "alpha_of_x", "alpha_closed_form"]

DEFAULT_CONFIG = SolverConfig()

# Closed-form and direct evaluations of alpha(x) must agree to this.
ALPHA_AGREEMENT_RTOL = 1e-10


@dataclass(frozen=True)
class CriticalPoint:
    x: float
    t_star: float
    alpha: float
    residual: float
    iterations: int
    bracket_lo: float
    bracket_hi: float


def alpha_closed_form(x: float, t: float) -> float:
    """alpha = (1+x) t / (x^2 + (1+t)^2 + x (2+t)), valid at t = t*(x)."""
    return (1.0 + x) * t / (x * x + (1.0 + t) ** 2 + x * (2.0 + t))


def _check_x(x) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 1.0:
        raise DomainError(f"x must be >= 1, got {x!r}")
    return x


def solve_t_star(x: float, cfg: SolverConfig | None = None) -> CriticalPoint:
    """Locate the maximiser t*(x) of tau(x, .) by safeguarded Newton.

    >>> cp = solve_t_star(1.0)
    >>> cp.t_star, cp.alpha
    (1.0, 0.25)
    """
    cfg = cfg or DEFAULT_CONFIG
    x = _check_x(x)
    lo, hi = lemma_lower_bracket(x), x

    def f(t):
        return eval_dtau_dt(x, t)

    def df(t):
        return eval_d2tau_dt2(x, t)

    if f(lo) < 0.0:
        raise SolverError(
            f"d tau/dt(x={x!r}, t={lo!r}) < 0: the lower bracket end is past the maximum"
        )
    res = newton_bisect(
        f,
        df,
        lo,
        hi,
        rel_tol=cfg.rel_tol,
        abs_tol=cfg.abs_tol,
        ftol=cfg.rel_tol / x,
        max_iter=cfg.max_iter,
    )
    t = res.root
    return CriticalPoint(
        x=x,
        t_star=t,
        alpha=alpha_closed_form(x, t),
        residual=abs(res.value),
        iterations=res.iterations,
        bracket_lo=lo,
        bracket_hi=hi,
    )


def alpha_of_x(x: float, cfg: SolverConfig | None = None) -> float:
    """Maximum of tau(x, .) via the closed form at t*(x).

    With ``cfg.fd_check`` on, the direct value tau(x, t*) is computed as well
    and a :class:`SolverError` is raised if the two differ by more than
    ``ALPHA_AGREEMENT_RTOL`` relative.
    """
    cfg = cfg or DEFAULT_CONFIG
    cp = solve_t_star(x, cfg)
    if cfg.fd_check:
        direct = eval_tau(cp.x, cp.t_star)
        if abs(direct - cp.alpha) > ALPHA_AGREEMENT_RTOL * abs(cp.alpha):
            raise SolverError(
                f"alpha({x!r}): closed form {cp.alpha!r} and direct {direct!r} disagree"
            )
    return cp.alpha
