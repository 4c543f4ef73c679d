"""Popcount-class generation from difference sequences.

Members of the class (n, k) are generated in increasing order without
visiting any non-member.  The gaps between consecutive members are built
level by level: the gaps for k set bits are blocks copied from the gaps for
k - 1 set bits (one bit narrower), each block's last entry bumped by
``2**(k - 2)``, followed by a full copy of the narrower sequence.  A prefix
sum over ``[2**k - 1, *gaps]`` then yields the members.

Buffers holding gap sequences reserve slot 0 for the first member.  Every
level therefore reads the previous level at offset 1, and the final buffer
only needs the first member written into slot 0 and one in-place prefix sum
to become the member sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, MutableSequence, Sequence

import numpy as np

from .params import DEFAULT_MAX_ELEMENTS, CapacityError, Params

__all__ = [
    "CombinationSequence",
    "DifferenceSequence",
    "SegmentLengths",
    "check_capacity",
    "combination_sequence",
    "difference_sequence",
    "join_segments",
    "partial_sums",
    "partial_sums_inplace",
    "powers_of_two",
    "segment_lengths_at_level",
]

WORD = np.uint64


@dataclass(frozen=True, eq=False)
class _Sequence:
    params: Params
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]

    def tolist(self) -> list[int]:
        return self.values.tolist()


class DifferenceSequence(_Sequence):
    """Gaps between consecutive members of a popcount class; length C(n, k) - 1."""


class CombinationSequence(_Sequence):
    """All members of a popcount class in increasing order; length C(n, k)."""


@dataclass(frozen=True)
class SegmentLengths:
    level: int
    lengths: list[int]


def powers_of_two(m: int) -> list[int]:
    """Return ``[1, 2, 4, ..., 2**(m-1)]``."""
    return [1 << p for p in range(m)]


def partial_sums(seq: Sequence[int]) -> list[int]:
    """Running totals of ``seq`` as a new list."""
    return list(accumulate(seq))


def partial_sums_inplace(buf: MutableSequence[int] | np.ndarray):
    """Replace ``buf[i]`` by ``buf[0] + ... + buf[i]`` and return ``buf``.

    Works on lists and on 1-d numpy arrays.
    """
    if isinstance(buf, np.ndarray):
        if buf.size > 1:
            np.cumsum(buf, out=buf)
        return buf
    for i in range(1, len(buf)):
        buf[i] += buf[i - 1]
    return buf


def segment_lengths_at_level(width: int, level: int) -> SegmentLengths:
    """Apply :func:`partial_sums` ``level`` times to ``width`` ones.

    Entry ``i`` of the result is ``C(i + level, level)``.
    """
    if width < 1 or level < 0:
        raise ValueError(f"need width >= 1 and level >= 0, got width={width}, level={level}")
    lengths = [1] * width
    for _ in range(level):
        lengths = partial_sums(lengths)
    return SegmentLengths(level, lengths)


def _copy_segments(lengths: Sequence[int], prev: np.ndarray, addend: int) -> np.ndarray:
    # prev[0] is the reserved slot; the previous gaps live in prev[1:].
    total = sum(lengths)
    out = np.empty(1 + total + len(prev) - 1, dtype=WORD)
    out[0] = 0
    pos = 1
    for lng in lengths:
        out[pos:pos + lng] = prev[1:1 + lng]
        out[pos + lng - 1] += WORD(addend)
        pos += lng
    out[pos:] = prev[1:]
    return out


def join_segments(lengths: SegmentLengths | Sequence[int], prev_diffs, bit_count: int) -> np.ndarray:
    """Build the gap sequence for ``bit_count`` set bits from the one below.

    For each length ``L`` emit ``prev_diffs[:L]`` with ``2**(bit_count - 2)``
    added to its last entry, then append all of ``prev_diffs``.
    """
    if isinstance(lengths, SegmentLengths):
        lengths = lengths.lengths
    if bit_count < 2:
        raise ValueError(f"bit_count must be >= 2, got {bit_count}")
    prev = np.empty(len(prev_diffs) + 1, dtype=WORD)
    prev[0] = 0
    prev[1:] = np.asarray(prev_diffs, dtype=WORD)
    for lng in lengths:
        if not 1 <= lng <= len(prev_diffs):
            raise ValueError(
                f"segment length {lng} outside 1..{len(prev_diffs)} (length of previous gaps)"
            )
    return _copy_segments(lengths, prev, 1 << (bit_count - 2))[1:]


def check_capacity(params: Params, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    """Return C(n, k), raising :class:`CapacityError` if it exceeds ``max_elements``."""
    size = math.comb(params.n, params.k)
    if size > max_elements:
        raise CapacityError(
            f"class (n={params.n}, k={params.k}) has {size} members, "
            f"above the element cap of {max_elements}"
        )
    return size


def _gap_buffer(params: Params) -> np.ndarray:
    """Gap sequence with the reserved leading slot, for 1 <= k < n."""
    n, k = params.n, params.k
    width = n - k
    prev = np.empty(width + 1, dtype=WORD)
    prev[0] = 0
    prev[1:] = np.left_shift(WORD(1), np.arange(width, dtype=WORD))
    lengths = [1] * width
    for bit_count in range(2, k + 1):
        lengths = partial_sums(lengths)
        prev = _copy_segments(lengths, prev, 1 << (bit_count - 2))
    return prev


def difference_sequence(params: Params, max_elements: int = DEFAULT_MAX_ELEMENTS) -> DifferenceSequence:
    """Gaps between consecutive members of the class ``params``.

    Empty for the single-member classes k = 0 and k = n.
    """
    check_capacity(params, max_elements)
    if params.k == 0 or params.k == params.n:
        return DifferenceSequence(params, np.empty(0, dtype=WORD))
    return DifferenceSequence(params, _gap_buffer(params)[1:])


def combination_sequence(params: Params, max_elements: int = DEFAULT_MAX_ELEMENTS) -> CombinationSequence:
    """All n-bit integers with exactly k bits set, in increasing order."""
    check_capacity(params, max_elements)
    n, k = params.n, params.k
    if k == 0 or k == n:
        return CombinationSequence(params, np.array([params.first], dtype=WORD))
    # (2**k - 1) * 2**(n-k) <= 2**64 - 2**(n-k), so no running total overflows a word.
    assert params.last < 1 << 64
    buf = _gap_buffer(params)
    buf[0] = params.first
    partial_sums_inplace(buf)
    return CombinationSequence(params, buf)
