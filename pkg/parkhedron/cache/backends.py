"""Cache backends - Implementation of caching strategies.

- MemoryCache: In-memory caching using a Python dictionary
"""

import threading
from typing import Any, Dict, Hashable
import logging

from .manager import CacheBackend

logger = logging.getLogger(__name__)


class MemoryCache(CacheBackend):
    """In-memory cache backend using a Python dictionary.

    Thread-safe; keys are any hashable value (degrees, partitions).
    """

    def __init__(self):
        """Initialize in-memory cache."""
        self._cache: Dict[Hashable, Any] = {}
        self._lock = threading.RLock()
        logger.debug("MemoryCache initialized")

    def get(self, key: Hashable, default: Any = None) -> Any:
        """Retrieve a value from memory cache."""
        with self._lock:
            return self._cache.get(key, default)

    def set(self, key: Hashable, value: Any) -> bool:
        """Store a value in memory cache."""
        with self._lock:
            self._cache[key] = value
        return True

    def clear(self) -> bool:
        """Clear all cached values."""
        with self._lock:
            self._cache.clear()
        return True

    def get_stats(self) -> Dict[str, Any]:
        """Get memory cache statistics."""
        with self._lock:
            return {
                'type': 'memory',
                'total_keys': len(self._cache),
            }
