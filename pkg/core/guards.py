"""Desk-scale size guards shared by the engines."""

from .exceptions import GuardError
from .logger import get_logger

logger = get_logger(__name__)


def check_guard(name: str, value: int, limit: int) -> None:
    """
    Raise GuardError if value exceeds limit.

    Args:
        name: Guard name reported to the user
        value: Measured size of the input
        limit: Configured maximum
    """
    if value > limit:
        logger.warning("Size guard exceeded", guard=name, value=value, limit=limit)
        raise GuardError(name, limit, value)
