"""Retry decorator for seeded samplers."""

from __future__ import annotations

import functools
import logging
from typing import Any, Callable, Tuple, Type

import numpy as np

from .logger import get_logger, log_event


def with_retry(
    exceptions: Tuple[Type[BaseException], ...],
    max_attempts: int = 3,
) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Retry a sampler with a fresh child generator after a failure.

    The wrapped function must take its randomness from an ``rng`` keyword
    argument (a ``numpy.random.Generator``). Each retry spawns a child of
    the original generator, so the sequence of attempts is a deterministic
    function of the caller's seed.

    Args:
        exceptions: Tuple of exception types that should trigger a retry.
        max_attempts: Maximum number of attempts (including the first).
    """

    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        logger = get_logger(f"retry.{func.__name__}")

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            rng = kwargs.get("rng")
            if rng is None:
                rng = np.random.default_rng()
            attempt = 1
            while True:
                try:
                    return func(*args, **{**kwargs, "rng": rng})
                except exceptions as exc:  # type: ignore[misc]
                    if attempt >= max_attempts:
                        raise
                    log_event(
                        logger,
                        level=logging.DEBUG,
                        message="Sampler failed, reseeding",
                        extra={"attempt": attempt, "error": str(exc)},
                    )
                    rng = rng.spawn(1)[0]
                    attempt += 1

        return wrapper

    return decorator
