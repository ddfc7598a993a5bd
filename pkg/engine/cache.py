"""Thread-safe memo cache shared by the recursion engines."""

from threading import Lock
from typing import Any, Dict, Hashable, Optional, Tuple

from core.config import get_config
from core.exceptions import EngineDisagreementError
from core.logger import get_logger

logger = get_logger(__name__)


class RecursionCache:
    """
    Per-run memo table keyed by (namespace, canonical key).

    Concurrent insertion of the same key is allowed as long as the values agree; a
    conflicting value means an engine bug and raises EngineDisagreementError.
    """

    def __init__(self, enabled: Optional[bool] = None):
        self.enabled = get_config().engine.cache_enabled if enabled is None else enabled
        self._store: Dict[Tuple[str, Hashable], Any] = {}
        self._lock = Lock()
        self.hits = 0
        self.misses = 0

    def get(self, namespace: str, key: Optional[Hashable]) -> Optional[Any]:
        if not self.enabled or key is None:
            return None
        with self._lock:
            value = self._store.get((namespace, key))
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, namespace: str, key: Optional[Hashable], value: Any) -> None:
        if not self.enabled or key is None:
            return
        with self._lock:
            existing = self._store.setdefault((namespace, key), value)
        if existing != value:
            logger.error("Memo conflict", namespace=namespace)
            raise EngineDisagreementError("memo", namespace, None, existing, value)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._store)

    def stats(self) -> Dict[str, int]:
        """Hit/miss counters and entry count (bench output)."""
        return {"hits": self.hits, "misses": self.misses, "entries": len(self._store)}
