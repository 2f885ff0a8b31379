"""Enumeration caps and the wall-clock budget.

Limits travel in a context variable so that library calls stay pure
functions of their arguments while the command line can still tighten
them for a whole run::

    with limits(max_enum=10_000, time_budget=5.0):
        report = dao_report(I)
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace

from .errors import BudgetExceededError, CapExceededError

DEFAULT_MAX_ENUM = 4_000_000


@dataclass(frozen=True)
class Limits:
    max_enum: int = DEFAULT_MAX_ENUM
    deadline: float | None = None  # time.monotonic() value


_current: ContextVar[Limits] = ContextVar("daonum_limits", default=Limits())


def current() -> Limits:
    return _current.get()


@contextmanager
def limits(max_enum: int | None = None, time_budget: float | None = None):
    """Temporarily override the enumeration cap and/or set a time budget (seconds)."""
    lim = current()
    if max_enum is not None:
        if max_enum <= 0:
            raise ValueError("max_enum must be positive")
        lim = replace(lim, max_enum=max_enum)
    if time_budget is not None:
        deadline = time.monotonic() + time_budget
        if lim.deadline is not None:
            deadline = min(deadline, lim.deadline)
        lim = replace(lim, deadline=deadline)
    token = _current.set(lim)
    try:
        yield lim
    finally:
        _current.reset(token)


def check_enum(count: int, what: str) -> None:
    lim = current()
    if count > lim.max_enum:
        raise CapExceededError(f"{what}: {count} items exceeds the enumeration cap {lim.max_enum}")
    check_deadline()


def check_deadline() -> None:
    deadline = current().deadline
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceededError("time budget exceeded")
