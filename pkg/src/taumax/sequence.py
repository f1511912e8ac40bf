"""Integer-indexed maximiser sequences t_n, alpha_n and checks on them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SolverError
from .limits import LimitConstants, limit_constants
from .maximizer import DEFAULT_CONFIG, alpha_closed_form, solve_t_star
from .roots import SolverConfig
from .tau import eval_dtau_dt, lemma_lower_bracket

__all__ = [
    "SequenceRow",
    "Claim",
    "ClaimReport",
    "compute_sequence",
    "verify_claims",
    "cross_index_closed_form",
    "sample_indices",
    "CONVERGENCE_CONSTANT",
    "DENSE_LIMIT",
]

# Empirical: t_n/n - ell ~ 0.41/n and alpha_star - alpha_n ~ 0.12/n.
CONVERGENCE_CONSTANT = 2.0
# Log sampling keeps every n up to here and thins out above it.
DENSE_LIMIT = 1000
LOG_POINTS_PER_DECADE = 20
CROSS_INDEX_RTOL = 1e-9
IDENTITY_RTOL = 1e-10


@dataclass(frozen=True)
class SequenceRow:
    n: int
    t_n: float
    alpha_n: float
    ratio: float
    gap: float


@dataclass(frozen=True)
class Claim:
    key: str
    description: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ClaimReport:
    claims: tuple[Claim, ...]
    # Observations recorded without a pass/fail verdict.
    notes: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def __getitem__(self, key: str) -> Claim:
        for c in self.claims:
            if c.key == key:
                return c
        raise KeyError(key)


def sample_indices(n_max: int, sampling: str = "dense") -> list[int]:
    """Indices at which the sequence is evaluated, in increasing order."""
    n_max = int(n_max)
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if sampling == "dense":
        return list(range(1, n_max + 1))
    if sampling != "log":
        raise DomainError(f"unknown sampling {sampling!r}; expected 'dense' or 'log'")
    idx = set(range(1, min(n_max, DENSE_LIMIT) + 1))
    if n_max > DENSE_LIMIT:
        decades = math.log10(n_max / DENSE_LIMIT)
        count = max(2, int(math.ceil(decades * LOG_POINTS_PER_DECADE)) + 1)
        grid = np.geomspace(DENSE_LIMIT, n_max, count)
        idx.update(int(round(v)) for v in grid)
        idx.add(n_max)
    return sorted(idx)


def compute_sequence(
    n_max: int,
    sampling: str = "dense",
    cfg: SolverConfig | None = None,
    limits: LimitConstants | None = None,
) -> list[SequenceRow]:
    """Solve for t_n and alpha_n at the sampled n.

    Solver failures are re-raised as :class:`SolverError` naming the n.
    """
    cfg = cfg or DEFAULT_CONFIG
    limits = limits or limit_constants(cfg)
    rows = []
    for n in sample_indices(n_max, sampling):
        try:
            cp = solve_t_star(float(n), cfg)
        except SolverError as exc:
            raise SolverError(f"n={n}: {exc}") from exc
        rows.append(
            SequenceRow(
                n=n,
                t_n=cp.t_star,
                alpha_n=cp.alpha,
                ratio=cp.t_star / n,
                gap=limits.alpha_star - cp.alpha,
            )
        )
    return rows


def cross_index_closed_form(n: float, t_next: float) -> float:
    """d tau/dt (n, t_{n+1}) with t_{n+1} eliminated through its own critical-point equation."""
    t = t_next
    return -(1.0 + n) * (1.0 + n - t) / (n * t * ((2.0 + n) ** 2 + (3.0 + n) * t + t * t))


def _strictly_increasing(values) -> tuple[bool, str]:
    for i in range(1, len(values)):
        if not values[i] > values[i - 1]:
            return False, f"fails at position {i}"
    return True, ""


def verify_claims(rows: list[SequenceRow], limits: LimitConstants) -> ClaimReport:
    """Check monotonicity, bounds and convergence claims on computed rows.

    Violations are reported in the returned :class:`ClaimReport`, never raised.
    """
    if not rows:
        raise DomainError("verify_claims needs at least one row")
    ns = [r.n for r in rows]
    if ns != sorted(set(ns)):
        raise DomainError("rows must be sorted by strictly increasing n")

    claims = []

    ok, why = _strictly_increasing([r.t_n for r in rows])
    claims.append(Claim("t_increasing", "t_n strictly increasing", ok, why))

    ok, why = _strictly_increasing([r.alpha_n for r in rows])
    claims.append(Claim("alpha_increasing", "alpha_n strictly increasing", ok, why))

    bad = [r.n for r in rows if not r.alpha_n < limits.alpha_star]
    claims.append(
        Claim(
            "alpha_below_limit",
            "alpha_n < alpha_star for every n",
            not bad,
            f"violated at n={bad[:5]}" if bad else "",
        )
    )

    last = rows[-1]
    c = CONVERGENCE_CONSTANT
    dev = abs(last.ratio - limits.ell)
    claims.append(
        Claim(
            "ratio_converges",
            f"|t_N/N - ell| <= {c:g}/N at the largest N",
            dev <= c / last.n,
            f"N={last.n} deviation={dev:.3e} bound={c / last.n:.3e}",
        )
    )
    gap = abs(limits.alpha_star - last.alpha_n)
    claims.append(
        Claim(
            "alpha_converges",
            f"|alpha_star - alpha_N| <= {c:g}/N at the largest N",
            gap <= c / last.n,
            f"N={last.n} gap={gap:.3e} bound={c / last.n:.3e}",
        )
    )

    bad = []
    for r in rows:
        n = float(r.n)
        lo = lemma_lower_bracket(n)
        # n = 1 is the endpoint case t_1 = 1, alpha_1 = 1/4: both upper
        # bounds are attained there.
        cap = n / (3.0 * n + 1.0)
        in_bracket = lo <= r.t_n <= n and (r.n == 1 or r.t_n < n)
        below = 0.0 <= r.alpha_n <= cap and (r.n == 1 or r.alpha_n < cap)
        identity = alpha_closed_form(n, r.t_n)
        same = abs(identity - r.alpha_n) <= IDENTITY_RTOL * abs(identity)
        if not (in_bracket and below and same):
            bad.append(r.n)
    claims.append(
        Claim(
            "bounds",
            "(n+1)^2/(2n+3) <= t_n < n and 0 <= alpha_n < n/(3n+1), equality at n=1",
            not bad,
            f"violated at n={bad[:5]}" if bad else "",
        )
    )

    bad, worst, pairs = [], 0.0, 0
    for a, b in zip(rows, rows[1:]):
        if b.n != a.n + 1:
            continue
        pairs += 1
        closed = cross_index_closed_form(float(a.n), b.t_n)
        direct = eval_dtau_dt(float(a.n), b.t_n)
        rel = abs(closed - direct) / abs(closed) if closed else math.inf
        worst = max(worst, rel)
        if not (closed < 0.0 and direct < 0.0 and rel <= CROSS_INDEX_RTOL):
            bad.append(a.n)
    claims.append(
        Claim(
            "cross_index_sign",
            "d tau/dt(n, t_{n+1}) < 0, closed form == direct",
            not bad,
            f"{pairs} pairs, worst rel diff {worst:.2e}"
            + (f"; violated at n={bad[:5]}" if bad else ""),
        )
    )

    ratios = [r.ratio for r in rows]
    notes = {
        "ratio_monotone_decreasing": all(b < a for a, b in zip(ratios, ratios[1:])),
        "sup_alpha_n": max(r.alpha_n for r in rows),
        "alpha_star": limits.alpha_star,
    }
    return ClaimReport(tuple(claims), notes)
