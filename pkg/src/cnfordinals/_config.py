"""Operational limits, overridable per context."""
from __future__ import annotations

import contextlib
import contextvars
import dataclasses


@dataclasses.dataclass(frozen=True)
class Limits:
    max_numeral: int = 2**16
    max_depth: int = 10**5
    step_budget: int = 10**6
    max_terms: int = 10**6


_LIMITS: contextvars.ContextVar[Limits] = contextvars.ContextVar("limits", default=Limits())


def limits() -> Limits:
    return _LIMITS.get()


@contextlib.contextmanager
def using_limits(**overrides):
    """Temporarily replace some limits, e.g. ``using_limits(step_budget=100)``."""
    token = _LIMITS.set(dataclasses.replace(_LIMITS.get(), **overrides))
    try:
        yield _LIMITS.get()
    finally:
        _LIMITS.reset(token)
