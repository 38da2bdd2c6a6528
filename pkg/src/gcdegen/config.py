"""Enumeration limits shared by every bounded operation."""

import dataclasses
import logging
import os
from dataclasses import dataclass

from .errors import BoundExceededError, ConfigError

logger = logging.getLogger(__name__)

MAX_ENUM_ENV = "GCDEGEN_MAX_ENUM"
"""Environment variable overriding :attr:`Limits.max_patterns`."""


@dataclass(kw_only=True, frozen=True)
class Limits:
    """Desk-scale bounds. Every bounded operation refuses larger inputs."""

    max_pipe_dream_n: int = 7
    """Largest ``n`` accepted by pipe-dream enumeration."""
    max_patterns: int = 10**7
    """Largest number of candidate Gel'fand-Cetlin patterns to scan."""
    max_minor_size: int = 8
    """Largest minor size expanded term by term."""
    max_fulton_n: int = 6
    """Largest ``n`` for Fulton generators and initial ideals."""
    max_verify_n: int = 5
    """Largest ``n`` for a degeneration check unless ``force`` is set."""
    max_upsilon_indices: int = 16
    """Largest number of summands ``a_1 + ... + a_n`` when building Upsilon."""
    max_semigroup_n: int = 8
    """Largest ``n`` for the semigroup rank computation."""
    max_buchberger_n: int = 3
    """Largest ``n`` for the Gröbner basis spot-check."""
    force: bool = False
    """Lift ``max_verify_n`` up to ``max_fulton_n``."""

    @classmethod
    def from_env(cls) -> "Limits":
        """Default limits, with ``max_patterns`` taken from ``GCDEGEN_MAX_ENUM`` if set.

        Raises
        ------
        ConfigError
            If the environment variable is not a positive integer.
        """
        raw = os.environ.get(MAX_ENUM_ENV)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"{MAX_ENUM_ENV} must be an integer, got {raw!r}") from None
        if value <= 0:
            raise ConfigError(f"{MAX_ENUM_ENV} must be positive, got {value}")
        return cls(max_patterns=value)

    def with_overrides(self, **overrides) -> "Limits":
        """Return a copy with the given attributes replaced; ``None`` values are ignored."""
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})

    @property
    def verify_n(self) -> int:
        """Effective bound for degeneration checks."""
        return self.max_fulton_n if self.force else self.max_verify_n

    def check(self, what: str, value: int, bound: int) -> None:
        """Raise :class:`BoundExceededError` when ``value > bound``."""
        if value > bound:
            logger.warning("refusing %s = %d (bound %d)", what, value, bound)
            raise BoundExceededError(f"{what} = {value} exceeds the configured bound {bound}")


def resolve(limits: None | Limits) -> Limits:
    """Return ``limits`` or the environment defaults."""
    return limits if limits is not None else Limits.from_env()
