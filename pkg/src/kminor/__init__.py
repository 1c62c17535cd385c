"""Certified strongly 1-shallow complete minors in complements of Kneser graphs."""
from .bounds import BoundReport, Construction, best_bound, chi, dbar, gap_bound, t1, t2, t3
from .builder import Bag, MinorCertificate, build, build_best
from .kneser import Params
from .subsets import KSubset, binomial, colex_rank, colex_unrank
from .verifier import VerificationReport, verify, verify_odd_witness

__all__ = [
    "Bag",
    "BoundReport",
    "Construction",
    "KSubset",
    "MinorCertificate",
    "Params",
    "VerificationReport",
    "best_bound",
    "binomial",
    "build",
    "build_best",
    "chi",
    "colex_rank",
    "colex_unrank",
    "dbar",
    "gap_bound",
    "t1",
    "t2",
    "t3",
    "verify",
    "verify_odd_witness",
]
__version__ = "0.1.0"
