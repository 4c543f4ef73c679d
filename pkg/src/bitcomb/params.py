"""Shared parameter type and error classes."""

from __future__ import annotations

from dataclasses import dataclass

MAX_WIDTH = 64
DEFAULT_MAX_ELEMENTS = 1 << 27


class InvalidParams(ValueError):
    """Raised for (n, k) pairs outside 0 <= k <= n, 1 <= n <= 64."""


class CapacityError(Exception):
    """Raised when a request would exceed a size limit (element cap, filter cap)."""


@dataclass(frozen=True)
class Params:
    """A popcount class: all ``n``-bit integers with exactly ``k`` bits set."""

    n: int
    k: int

    def __post_init__(self) -> None:
        for name in ("n", "k"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParams(f"{name} must be an integer, got {value!r}")
        if not 1 <= self.n <= MAX_WIDTH:
            raise InvalidParams(f"n must satisfy 1 <= n <= {MAX_WIDTH}, got n={self.n}")
        if not 0 <= self.k <= self.n:
            raise InvalidParams(f"k must satisfy 0 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def first(self) -> int:
        """Smallest member, the k low bits set."""
        return (1 << self.k) - 1

    @property
    def last(self) -> int:
        """Largest member, the k high bits set."""
        return ((1 << self.k) - 1) << (self.n - self.k)
