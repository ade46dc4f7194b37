"""Desk-scale capacity bounds shared by every module.

Each exhaustive routine declares the largest ``n`` it accepts.  Setting the
environment variable ``COINV_MAX_N`` raises (or lowers) every bound at once.
"""

from __future__ import annotations

import os


class CapacityError(ValueError):
    """Raised when a request exceeds the configured desk-scale bound."""


def max_n(default: int) -> int:
    override = os.environ.get("COINV_MAX_N")
    if override is None or override == "":
        return default
    if not (override.isascii() and override.isdecimal()):
        raise ValueError(f"COINV_MAX_N must be a decimal integer, got {override!r}")
    return int(override)


def check_n(n: int, default: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what}: n must be nonnegative, got {n}")
    bound = max_n(default)
    if n > bound:
        raise CapacityError(f"{what}: n={n} exceeds the desk bound {bound} (set COINV_MAX_N to override)")
