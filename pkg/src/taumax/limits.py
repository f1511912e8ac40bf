"""Limit constants of the maximiser sequence.

t_n / n tends to ell = 1/x0 where x0 is the root of
eta(a) = exp(a) - a^2 - a - 1 beyond the minimum a0 of eta (eta'(a0) = 0),
and the maxima tend to alpha_star = ell / (1 + ell + ell^2).

Nothing here is hard-coded: every constant comes out of a bracketed root
solve, with brackets whose sign changes are checked on entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import SolverError
from .roots import SolverConfig, newton_bisect

__all__ = [
    "LimitConstants",
    "eval_eta",
    "eval_eta_prime",
    "solve_a0",
    "solve_x0",
    "limit_constants",
    "ell_equation_residual",
]

DEFAULT_CONFIG = SolverConfig()

# eta(3) = e^3 - 13 > 0 closes the bracket for x0 from above.
X0_UPPER = 3.0


@dataclass(frozen=True)
class LimitConstants:
    a0: float
    x0: float
    ell: float
    alpha_star: float
    eta_residual: float


def eval_eta(a: float) -> float:
    """eta(a) = e^a - a^2 - a - 1."""
    return math.exp(a) - a * a - a - 1.0


def eval_eta_prime(a: float) -> float:
    return math.exp(a) - 2.0 * a - 1.0


def _eta_second(a: float) -> float:
    return math.exp(a) - 2.0


def solve_a0(cfg: SolverConfig | None = None) -> float:
    """Root of eta'(a) = e^a - 2a - 1 on (1, 2), about 1.2564."""
    cfg = cfg or DEFAULT_CONFIG
    res = newton_bisect(
        eval_eta_prime,
        _eta_second,
        1.0,
        2.0,
        rel_tol=cfg.rel_tol,
        abs_tol=cfg.abs_tol,
        ftol=cfg.rel_tol,
        max_iter=cfg.max_iter,
    )
    return res.root


def solve_x0(cfg: SolverConfig | None = None) -> LimitConstants:
    """Solve e^a = a^2 + a + 1 on (a0, 3) and derive ell and alpha_star."""
    cfg = cfg or DEFAULT_CONFIG
    a0 = solve_a0(cfg)
    if not (eval_eta(a0) < 0.0 < eval_eta(X0_UPPER)):
        raise SolverError("eta does not change sign on [a0, 3]")
    res = newton_bisect(
        eval_eta,
        eval_eta_prime,
        a0,
        X0_UPPER,
        rel_tol=cfg.rel_tol,
        abs_tol=cfg.abs_tol,
        ftol=cfg.rel_tol,
        max_iter=cfg.max_iter,
    )
    x0 = res.root
    ell = 1.0 / x0
    return LimitConstants(
        a0=a0,
        x0=x0,
        ell=ell,
        alpha_star=ell / (1.0 + ell + ell * ell),
        eta_residual=abs(eval_eta(x0)),
    )


@lru_cache(maxsize=8)
def limit_constants(cfg: SolverConfig | None = None) -> LimitConstants:
    """Cached :func:`solve_x0`; SolverConfig is frozen and hashable."""
    return solve_x0(cfg)


def ell_equation_residual(ell: float) -> float:
    """e^(1/ell) - 1/ell^2 - 1/ell - 1, the same equation written in ell."""
    a = 1.0 / ell
    return math.exp(a) - a * a - a - 1.0
