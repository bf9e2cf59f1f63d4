"""Exact computations for the fixed-length Levenshtein metric on words over Z_q."""
from .errors import DomainError, ResourceGuardError, UnsupportedRadiusError
from .kernels import BACKEND
from .words import Word, alternating_profile, runs
from .metric import fll_ball, fll_distance, lcs_length
from .extremal import max_ball_binary, max_ball_nonbinary, min_ball_size
from .average import average_ball_size
from .setcodes import WordSet, search_maximal_anticodes
from .sweep import SweepSummary, sweep

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomainError",
    "ResourceGuardError",
    "UnsupportedRadiusError",
    "Word",
    "WordSet",
    "SweepSummary",
    "alternating_profile",
    "average_ball_size",
    "fll_ball",
    "fll_distance",
    "lcs_length",
    "max_ball_binary",
    "max_ball_nonbinary",
    "min_ball_size",
    "runs",
    "search_maximal_anticodes",
    "sweep",
]
