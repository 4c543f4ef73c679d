"""Reference generators and exact combinatorics.

Nothing here shares code with :mod:`bitcomb.combcore`; these routines exist
to check it and to serve as timing baselines.
"""

from __future__ import annotations

import enum
from typing import Iterator

import numpy as np

from .params import MAX_WIDTH, CapacityError, InvalidParams, Params
from .combcore import CombinationSequence

FILTER_MAX_WIDTH = 24
_MASK64 = (1 << 64) - 1


class EngineKind(str, enum.Enum):
    DIFF = "diff"
    GOSPER = "gosper"
    FILTER = "filter"


def popcount(x: int) -> int:
    return x.bit_count()


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) for 0 <= n <= 64; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs n, k >= 0, got ({n}, {k})")
    if n > MAX_WIDTH:
        raise InvalidParams(f"binomial limited to n <= {MAX_WIDTH}, got n={n}")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # result == C(n - k + i - 1, i - 1) here, so the division is exact.
        result = result * (n - k + i) // i
    return result


def filter_by_popcount(params: Params) -> CombinationSequence:
    """Scan every n-bit integer and keep those with k bits set."""
    if params.n > FILTER_MAX_WIDTH:
        raise CapacityError(
            f"filter engine limited to n <= {FILTER_MAX_WIDTH}, got n={params.n}"
        )
    everything = np.arange(1 << params.n, dtype=np.uint64)
    keep = np.bitwise_count(everything) == params.k
    return CombinationSequence(params, everything[keep])


def next_same_popcount(x: int) -> int:
    """Smallest integer above ``x`` with the same number of set bits."""
    if x <= 0:
        raise ValueError("next_same_popcount needs x > 0")
    lowest = x & -x
    ripple = x + lowest
    ones = ((ripple ^ x) >> 2) // lowest
    return ripple | ones


def iter_gosper(params: Params) -> Iterator[int]:
    """Yield the class members one at a time in increasing order."""
    if params.k == 0:
        yield 0
        return
    x, last = params.first, params.last
    while True:
        yield x
        if x == last:
            return
        x = next_same_popcount(x)


def gosper_sequence(params: Params) -> CombinationSequence:
    values = list(iter_gosper(params))
    assert values[-1] <= _MASK64
    return CombinationSequence(params, np.array(values, dtype=np.uint64))
