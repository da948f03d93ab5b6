"""Cache utilities - Cache construction and the shared default cache."""

import logging
import threading
from typing import Optional

from parkhedron.errors import ConfigurationError

from .manager import CacheManager
from .backends import MemoryCache

logger = logging.getLogger(__name__)

_default_cache: Optional[CacheManager] = None
_default_lock = threading.Lock()


class CacheFactory:
    """Factory for creating cache configurations."""

    @staticmethod
    def create_backend(backend_type: str = 'memory'):
        """Create a cache backend.

        Args:
            backend_type: Type of backend ('memory')

        Returns:
            Cache backend instance

        Raises:
            ConfigurationError: If backend type is unsupported
        """
        if backend_type.lower() == 'memory':
            return MemoryCache()
        raise ConfigurationError(f"Unsupported cache backend: {backend_type}")

    @staticmethod
    def create_manager(backend_type: str = 'memory') -> CacheManager:
        """Create a cache manager with backend."""
        return CacheManager(CacheFactory.create_backend(backend_type))


def get_default_cache() -> CacheManager:
    """Return the process-wide cache, creating it on first use."""
    global _default_cache
    if _default_cache is None:
        with _default_lock:
            if _default_cache is None:
                _default_cache = CacheFactory.create_manager('memory')
    return _default_cache


def configure_default_cache(backend_type: str = 'memory') -> CacheManager:
    """Replace the process-wide cache (called once by the CLI from config)."""
    global _default_cache
    with _default_lock:
        _default_cache = CacheFactory.create_manager(backend_type)
        logger.debug(f"Default cache configured with backend: {backend_type}")
    return _default_cache
