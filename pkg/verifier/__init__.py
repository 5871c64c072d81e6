"""
Verifier
Lowest-cell enumeration, factorization verification, lemma suites and the affine-kl command line
"""

from .cell_enumeration import brute_force_lowest_cell, enumerate_lowest_cell
from .factorization_check import VerificationReport, verify_factorization, verify_main_theorem
from .lemma_suite import run_lemma_suite
from .reports import run_verification
from .settings import Settings, SuiteConfig, load_settings

__all__ = [
    "Settings",
    "SuiteConfig",
    "VerificationReport",
    "brute_force_lowest_cell",
    "enumerate_lowest_cell",
    "load_settings",
    "run_lemma_suite",
    "run_verification",
    "verify_factorization",
    "verify_main_theorem",
]
