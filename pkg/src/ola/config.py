"""Runtime limits, overridable through the environment or the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass
class Settings:
    """Global resource bounds.

    ``max_window`` caps the number of chain positions any single
    computation may touch (finite Weyl groups are ``S_n`` for ``n`` up to
    this value).  ``cache_limit`` caps the number of entries kept by each
    memo table before least-recently-used eviction.
    """

    max_window: int = 10
    cache_limit: int = 200_000

    @classmethod
    def from_env(cls, environ=None) -> "Settings":
        environ = os.environ if environ is None else environ
        out = cls()
        for name, var in (("max_window", "OLA_MAX_WINDOW"), ("cache_limit", "OLA_CACHE_LIMIT")):
            raw = environ.get(var)
            if raw is not None and raw.strip():
                setattr(out, name, int(raw))
        return out

    def update(self, **changes) -> None:
        known = {f.name for f in fields(self)}
        for key, value in changes.items():
            if key not in known:
                raise AttributeError(key)
            if value is not None:
                setattr(self, key, int(value))


SETTINGS = Settings.from_env()
