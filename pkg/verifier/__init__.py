"""Claim catalog and runner."""

from .claims import CLAIMS, Claim, default_corpus, get_claim
from .runner import claim_counts, list_claims, run_claim, run_claims

__all__ = [
    "CLAIMS",
    "Claim",
    "get_claim",
    "default_corpus",
    "run_claim",
    "run_claims",
    "list_claims",
    "claim_counts",
]
