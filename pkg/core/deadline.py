"""Cooperative time limits for exhaustive searches.

Searches call `check_deadline()` periodically; the harness wraps each graph in
`time_limit(ms)`. The limit is held in a context variable, so concurrent
pipelines in different threads or processes do not see each other's limits.
"""

import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

from .errors import SearchTimeout

_deadline: ContextVar[Optional[float]] = ContextVar("deadline", default=None)


@contextmanager
def time_limit(ms: Optional[int]) -> Iterator[None]:
    """Run the enclosed block with a time limit of `ms` milliseconds.

    A limit of None or <= 0 disables the check. Nested limits keep the tighter one.
    """
    if ms is None or ms <= 0:
        yield
        return

    new_deadline = time.monotonic() + ms / 1000.0
    current = _deadline.get()
    if current is not None:
        new_deadline = min(new_deadline, current)
    token = _deadline.set(new_deadline)
    try:
        yield
    finally:
        _deadline.reset(token)


def check_deadline() -> None:
    """Raise SearchTimeout if the active time limit has passed."""
    deadline = _deadline.get()
    if deadline is not None and time.monotonic() > deadline:
        raise SearchTimeout("time limit exceeded")


def remaining_ms() -> Optional[int]:
    """Milliseconds left under the active limit, or None without one.

    Used to hand the limit on to worker processes, which do not share context.
    """
    deadline = _deadline.get()
    if deadline is None:
        return None
    return max(int((deadline - time.monotonic()) * 1000), 1)
