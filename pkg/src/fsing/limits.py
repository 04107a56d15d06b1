"""Resource guards shared by every module.

Computations here blow up quickly (``f**(p**e - 1)`` and boxes of size
``(p**e)**(n+1)``), so every expensive step checks a configurable limit and
raises :class:`ResourceLimitError` instead of exhausting memory.
"""

from __future__ import annotations

import contextlib
import contextvars
import os
from dataclasses import dataclass, replace

EXPONENT_LIMIT = 2**31


class ResourceLimitError(RuntimeError):
    """A configured size limit would be exceeded."""


@dataclass(frozen=True)
class Limits:
    max_terms: int = 10**7
    max_dim: int = 2**24


def _initial_limits() -> Limits:
    env = os.environ.get("FSING_MAX_DIM")
    if env:
        return Limits(max_dim=int(env))
    return Limits()


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar(
    "fsing_limits", default=_initial_limits()
)


def current_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def resource_limits(**overrides):
    """Temporarily override limits, e.g. ``with resource_limits(max_dim=10**5):``."""
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def check_terms(count: int, what: str = "polynomial") -> None:
    limit = _current.get().max_terms
    if count > limit:
        raise ResourceLimitError(f"{what} has {count} terms, limit is {limit}")


def check_dim(count: int, what: str = "vector space") -> None:
    limit = _current.get().max_dim
    if count > limit:
        raise ResourceLimitError(f"{what} has dimension {count}, limit is {limit}")


def check_exponent(value: int) -> None:
    if value >= EXPONENT_LIMIT:
        raise ResourceLimitError(f"exponent {value} exceeds 2^31")
