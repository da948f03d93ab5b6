"""Cache Manager - Core abstraction layer for cache backends.

Provides a unified interface over cache backends with hit/miss statistics.
Values stored here are immutable computation results (basis transition
tables), so entries never expire.
"""

import threading
from abc import ABC, abstractmethod
from datetime import datetime
from typing import Any, Callable, Dict, Hashable
import logging

logger = logging.getLogger(__name__)

_MISSING = object()


class CacheBackend(ABC):
    """Abstract base class for cache backends."""

    @abstractmethod
    def get(self, key: Hashable, default: Any = None) -> Any:
        """Retrieve a value from cache."""

    @abstractmethod
    def set(self, key: Hashable, value: Any) -> bool:
        """Store a value in cache."""

    @abstractmethod
    def clear(self) -> bool:
        """Clear all cached values."""

    @abstractmethod
    def get_stats(self) -> Dict[str, Any]:
        """Get cache statistics."""


class CacheManager:
    """Main cache manager with abstraction for multiple backends.

    Reads go straight to the backend; computing a
    missing entry happens under a single writer lock so each table is built
    once even when several threads ask for it at the same time.

    Attributes:
        backend: The active cache backend instance
        stats: Dictionary tracking cache hits, misses, and other metrics
    """

    def __init__(self, backend: CacheBackend):
        """Initialize cache manager with a backend.

        Args:
            backend: A CacheBackend instance (MemoryCache)
        """
        self.backend = backend
        self._writer = threading.RLock()
        self._stats_lock = threading.Lock()
        self.stats = {
            'hits': 0,
            'misses': 0,
            'sets': 0,
            'clears': 0,
        }
        self._created_at = datetime.now()
        logger.debug(f"CacheManager initialized with {backend.__class__.__name__}")

    def _count(self, name: str) -> None:
        # Kept apart from the writer lock, which is held while a factory runs
        with self._stats_lock:
            self.stats[name] += 1

    def get(self, key: Hashable, default: Any = None) -> Any:
        """Retrieve a value from cache.

        Args:
            key: Cache key to retrieve
            default: Returned when the key is absent

        Returns:
            Cached value or default
        """
        value = self.backend.get(key, _MISSING)
        if value is _MISSING:
            self._count('misses')
            logger.debug(f"Cache miss: {key}")
            return default
        self._count('hits')
        return value

    def set(self, key: Hashable, value: Any) -> bool:
        """Store a value in cache."""
        result = self.backend.set(key, value)
        if result:
            self._count('sets')
            logger.debug(f"Cache set: {key}")
        return result

    def clear(self) -> bool:
        """Clear all cached values."""
        result = self.backend.clear()
        if result:
            self._count('clears')
            logger.debug("Cache cleared")
        return result

    def get_or_set(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """Get value from cache or compute and cache it.

        Args:
            key: Cache key
            factory: Callable that produces the value if not cached

        Returns:
            Cached value or newly computed value
        """
        value = self.get(key, _MISSING)
        if value is not _MISSING:
            return value
        with self._writer:
            # Another writer may have filled the slot while we waited
            value = self.backend.get(key, _MISSING)
            if value is _MISSING:
                value = factory()
                self.set(key, value)
            return value

    def get_stats(self) -> Dict[str, Any]:
        """Get cache statistics and metrics.

        Returns:
            Dictionary with hits, misses, hit_rate (percent), sets, clears,
            backend name and backend-specific statistics
        """
        with self._stats_lock:
            stats = dict(self.stats)
        total_requests = stats['hits'] + stats['misses']
        hit_rate = (
            (stats['hits'] / total_requests * 100)
            if total_requests > 0
            else 0
        )

        return {
            'hits': stats['hits'],
            'misses': stats['misses'],
            'hit_rate': round(hit_rate, 2),
            'sets': stats['sets'],
            'clears': stats['clears'],
            'created_at': self._created_at.isoformat(),
            'backend': self.backend.__class__.__name__,
            'backend_stats': self.backend.get_stats(),
        }
