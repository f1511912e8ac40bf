"""Complete-monotonicity spot checks built on in-house gamma kernels and Taylor jets."""

from .jet import TaylorJet
from .special import digamma, lgamma, polygamma
from .verifier import CmReport, check_cm, f_beta, f_beta_jet, scaled_margins

__all__ = [
    "TaylorJet",
    "lgamma",
    "polygamma",
    "digamma",
    "CmReport",
    "check_cm",
    "f_beta",
    "f_beta_jet",
    "scaled_margins",
]
