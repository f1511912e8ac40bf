"""Safeguarded Newton iteration on a sign-change bracket.

Newton steps are taken while they stay strictly inside the current bracket
and shrink it fast enough; otherwise the iteration bisects.  The bracket is
updated after every function evaluation, so the method can never lose the
root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import SolverError


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances shared by every root solve in the package."""

    rel_tol: float = 1e-13
    abs_tol: float = 1e-14
    max_iter: int = 200
    fd_check: bool = True

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("rel_tol and abs_tol must be positive")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise ValueError("max_iter must be a positive integer")


@dataclass(frozen=True)
class RootResult:
    root: float
    value: float
    iterations: int
    lo: float
    hi: float


def newton_bisect(
    f: Callable[[float], float],
    df: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    rel_tol: float = 1e-13,
    abs_tol: float = 1e-14,
    ftol: float = 0.0,
    max_iter: int = 200,
    x0: float | None = None,
) -> RootResult:
    """Find a root of ``f`` in ``[lo, hi]``.

    ``f(lo)`` and ``f(hi)`` must differ in sign, unless one endpoint already
    satisfies ``|f| <= ftol`` in which case that endpoint is returned: the
    bracket is closed at both ends.

    Iteration stops once the last step satisfies
    ``|dt| <= abs_tol + rel_tol * |t|`` and ``|f(t)| <= ftol``, or when the
    bracket has shrunk to that width.  Raises :class:`SolverError` on a
    missing sign change or after ``max_iter`` iterations.
    """
    if not lo < hi:
        raise SolverError(f"empty bracket [{lo!r}, {hi!r}]")
    flo, fhi = f(lo), f(hi)
    if math.isnan(flo) or math.isnan(fhi):
        raise SolverError("function is NaN at a bracket endpoint")
    # Endpoint roots: take the one with the smaller residual.
    ends = sorted(((abs(flo), lo, flo), (abs(fhi), hi, fhi)))
    for res, t, ft in ends:
        if res <= ftol or ft == 0.0:
            return RootResult(t, ft, 0, lo, hi)
    if (flo > 0) == (fhi > 0):
        raise SolverError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo!r}, f(hi)={fhi!r}"
        )
    increasing = fhi > 0

    t = 0.5 * (lo + hi) if x0 is None or not lo < x0 < hi else x0
    prev_step = hi - lo
    for it in range(1, max_iter + 1):
        ft = f(t)
        if ft == 0.0:
            return RootResult(t, ft, it, lo, hi)
        if (ft > 0) == increasing:
            hi = t
        else:
            lo = t
        tol = abs_tol + rel_tol * abs(t)

        d = df(t)
        step = None
        if d != 0.0 and math.isfinite(d):
            cand = t - ft / d
            # Newton must land inside the bracket and be at most half the
            # previous step; otherwise bisect.
            if lo < cand < hi and abs(cand - t) <= 0.5 * abs(prev_step):
                step = cand - t
        if step is None:
            step = 0.5 * (lo + hi) - t
        prev_step = step
        t_new = t + step

        if abs(step) <= tol and abs(ft) <= ftol:
            return RootResult(t_new, f(t_new), it, lo, hi)
        if hi - lo <= tol:
            mid = 0.5 * (lo + hi)
            return RootResult(mid, f(mid), it, lo, hi)
        if t_new == t:
            # Step below one ulp; the bracket is as tight as binary64 allows.
            return RootResult(t, ft, it, lo, hi)
        t = t_new

    raise SolverError(f"no convergence after {max_iter} iterations on [{lo!r}, {hi!r}]")
