"""Maximum of tau(x, t) = (t - (t+x+1) (t/(1+t))^(x+1)) / x and its limit constants."""

from .errors import DomainError, JetError, SolverError, TaumaxError, UsageError
from .limits import LimitConstants, eval_eta, limit_constants, solve_a0, solve_x0
from .maximizer import CriticalPoint, alpha_of_x, solve_t_star
from .roots import SolverConfig
from .sequence import ClaimReport, SequenceRow, compute_sequence, verify_claims
from .tau import (
    TauPoint,
    eval_aux,
    eval_d2tau_dt2,
    eval_dtau_dt,
    eval_dtau_dx,
    eval_k,
    eval_psi_bound,
    eval_tau,
)

__version__ = "0.1.0"

__all__ = [
    "TaumaxError",
    "DomainError",
    "UsageError",
    "SolverError",
    "JetError",
    "SolverConfig",
    "TauPoint",
    "eval_tau",
    "eval_dtau_dt",
    "eval_d2tau_dt2",
    "eval_dtau_dx",
    "eval_k",
    "eval_psi_bound",
    "eval_aux",
    "CriticalPoint",
    "solve_t_star",
    "alpha_of_x",
    "LimitConstants",
    "eval_eta",
    "solve_a0",
    "solve_x0",
    "limit_constants",
    "SequenceRow",
    "ClaimReport",
    "compute_sequence",
    "verify_claims",
]
