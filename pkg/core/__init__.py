"""Core modules for the k-defect toolkit."""

from .config import Config, get_config
from .exceptions import (
    ClaimError,
    EngineDisagreementError,
    FamilyError,
    GraphError,
    GraphFormatError,
    GuardError,
    KDefectError,
    PolynomialError,
    ValidationError,
)
from .logger import get_logger

__all__ = [
    "Config",
    "get_config",
    "get_logger",
    "KDefectError",
    "GraphError",
    "GraphFormatError",
    "GuardError",
    "PolynomialError",
    "EngineDisagreementError",
    "FamilyError",
    "ClaimError",
    "ValidationError",
]
