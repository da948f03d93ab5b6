"""Cache module for parkhedron.

Memoizes immutable computation tables behind a thread-safe backend with
hit/miss statistics.
"""

from .manager import CacheManager, CacheBackend
from .backends import MemoryCache
from .utils import CacheFactory, get_default_cache, configure_default_cache

__all__ = [
    'CacheManager',
    'CacheBackend',
    'MemoryCache',
    'CacheFactory',
    'get_default_cache',
    'configure_default_cache',
]
