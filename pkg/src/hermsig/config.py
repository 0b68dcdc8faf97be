"""Static size limits, overridable through environment variables.

``HERMSIG_MAX_PARAMS``  largest m+n for AIII and largest rank parameter for the
                        other classical families (default 12).
``HERMSIG_ORBIT_LIMIT`` largest orbit orbit_bfs will build (default 10**7).
"""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_params: int = 12
    orbit_limit: int = 10**7

    @classmethod
    def from_env(cls) -> "Limits":
        return cls(
            max_params=int(os.environ.get("HERMSIG_MAX_PARAMS", cls.max_params)),
            orbit_limit=int(os.environ.get("HERMSIG_ORBIT_LIMIT", cls.orbit_limit)),
        )


LIMITS = Limits.from_env()
