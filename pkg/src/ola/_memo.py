"""Bounded, thread-safe memo tables with hit/miss counters."""

from __future__ import annotations

import functools
import threading
from collections import OrderedDict

from .config import SETTINGS

_REGISTRY: dict[str, "Memo"] = {}


class Memo:
    def __init__(self, name: str):
        self.name = name
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        _REGISTRY[name] = self

    def get(self, key, default=None):
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                self.hits += 1
                return self._data[key]
            self.misses += 1
            return default

    def put(self, key, value) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            limit = SETTINGS.cache_limit
            while len(self._data) > max(limit, 0):
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._data)


_MISSING = object()


def memoized(name: str):
    """Decorator caching on the positional arguments, which must be hashable."""

    def wrap(fn):
        memo = Memo(name)

        @functools.wraps(fn)
        def inner(*args):
            hit = memo.get(args, _MISSING)
            if hit is not _MISSING:
                return hit
            value = fn(*args)
            memo.put(args, value)
            return value

        inner.memo = memo
        return inner

    return wrap


def cache_stats() -> dict[str, dict[str, int]]:
    return {
        name: {"entries": len(m), "hits": m.hits, "misses": m.misses}
        for name, m in sorted(_REGISTRY.items())
    }


def clear_caches() -> None:
    for memo in _REGISTRY.values():
        memo.clear()
