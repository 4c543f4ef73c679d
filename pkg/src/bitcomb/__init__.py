"""Enumerate n-bit integers with exactly k bits set via difference sequences."""

from .combcore import (
    CombinationSequence,
    DifferenceSequence,
    SegmentLengths,
    combination_sequence,
    difference_sequence,
    join_segments,
    partial_sums,
    partial_sums_inplace,
    powers_of_two,
    segment_lengths_at_level,
)
from .oracle import EngineKind, binomial, filter_by_popcount, gosper_sequence, next_same_popcount, popcount
from .params import DEFAULT_MAX_ELEMENTS, CapacityError, InvalidParams, Params

__version__ = "0.1.0"
