# app/utils/cache.py

import functools
import logging
import threading
from typing import Any, Callable, Dict, List

from cachetools import LRUCache, cached

from app.core.config import settings

logger = logging.getLogger(__name__)

CACHE_STATS = {
    "hits": 0,
    "misses": 0,
    "size": 0,
}

_registered_caches: List[LRUCache] = []


class _CountingCache(LRUCache):
    """LRU cache that feeds the module-wide hit/miss counters."""

    def __getitem__(self, key):
        try:
            value = super().__getitem__(key)
        except KeyError:
            CACHE_STATS["misses"] += 1
            raise
        CACHE_STATS["hits"] += 1
        return value

    def __setitem__(self, key, value):
        super().__setitem__(key, value)
        CACHE_STATS["size"] = sum(len(c) for c in _registered_caches)


def memoize(maxsize: int = 0):
    """
    Decorator memoizing a pure function of hashable arguments.

    Args:
        maxsize: LRU capacity; 0 uses settings.CACHE_MAX_SIZE

    Returns:
        Decorated function backed by a cachetools LRU cache
    """
    def decorator(func: Callable):
        cache = _CountingCache(maxsize=maxsize or settings.CACHE_MAX_SIZE)
        _registered_caches.append(cache)
        wrapped = cached(cache, lock=threading.RLock())(func)
        wrapped.cache = cache
        return functools.wraps(func)(wrapped)
    return decorator


def get_cache_stats() -> Dict[str, Any]:
    """
    Get statistics about memoization usage

    Returns:
        Dictionary with cache statistics
    """
    stats = CACHE_STATS.copy()
    total = stats["hits"] + stats["misses"]
    stats["hit_ratio"] = stats["hits"] / total if total > 0 else 0
    return stats


def clear_caches() -> int:
    """
    Clear every registered cache

    Returns:
        Number of entries removed
    """
    count = sum(len(c) for c in _registered_caches)
    for cache in _registered_caches:
        cache.clear()
    CACHE_STATS["size"] = 0
    logger.info(f"Cleared memoization caches, removed {count} entries")
    return count
