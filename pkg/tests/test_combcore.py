import math
import random

import numpy as np
import pytest

from bitcomb import (
    CapacityError,
    InvalidParams,
    Params,
    combination_sequence,
    difference_sequence,
    join_segments,
    partial_sums,
    partial_sums_inplace,
    powers_of_two,
    segment_lengths_at_level,
)
from bitcomb.oracle import filter_by_popcount

import golden


def test_powers_of_two():
    assert powers_of_two(4) == golden.DIFF_5_1
    assert powers_of_two(0) == []
    assert powers_of_two(6) == [2**p for p in range(6)]


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([1, 1, 1, 1], [1, 2, 3, 4]),
        ([1, 2, 3, 4], [1, 3, 6, 10]),
        ([1, 2, 3, 4, 5], [1, 3, 6, 10, 15]),
        ([], []),
        ([7], [7]),
    ],
)
def test_partial_sums(seq, expected):
    assert partial_sums(seq) == expected
    buf = list(seq)
    assert partial_sums_inplace(buf) is buf
    assert buf == expected
    arr = np.array(seq, dtype=np.uint64)
    assert partial_sums_inplace(arr).tolist() == expected


def test_partial_sums_variants_agree_on_random_arrays():
    rng = random.Random(20261016)
    for _ in range(1000):
        seq = [rng.randrange(0, 1 << 32) for _ in range(rng.randrange(0, 40))]
        pure = partial_sums(seq)
        assert partial_sums_inplace(list(seq)) == pure
        assert partial_sums_inplace(np.array(seq, dtype=np.uint64)).tolist() == pure


def test_partial_sums_does_not_mutate_input():
    seq = [1, 2, 3]
    partial_sums(seq)
    assert seq == [1, 2, 3]


def _segments_of(out, lengths):
    pos, segs = 0, []
    for lng in lengths:
        segs.append(out[pos:pos + lng])
        pos += lng
    return segs, out[pos:]


@pytest.mark.parametrize(
    "table, prev, bit_count",
    [
        (golden.SEGMENTS_2, golden.DIFF_5_1, 2),
        (golden.SEGMENTS_3, golden.DIFF_6_2, 3),
        (golden.SEGMENTS_4, golden.DIFF_7_3, 4),
    ],
)
def test_join_segments_reproduces_tables(table, prev, bit_count):
    lengths = [lng for lng, _ in table]
    out = join_segments(lengths, prev, bit_count).tolist()
    segs, tail = _segments_of(out, lengths)
    assert segs == [seg for _, seg in table]
    assert tail == prev


def test_join_segments_full_outputs():
    assert join_segments([1, 2, 3, 4], [1, 2, 4, 8], 2).tolist() == golden.DIFF_6_2
    assert join_segments([1, 3, 6, 10], golden.DIFF_6_2, 3).tolist() == golden.DIFF_7_3
    assert join_segments([1], [1], 2).tolist() == [2, 1]


def test_join_segments_accepts_segment_lengths():
    lengths = segment_lengths_at_level(4, 1)
    assert join_segments(lengths, [1, 2, 4, 8], 2).tolist() == golden.DIFF_6_2


def test_join_segments_rejects_bad_input():
    with pytest.raises(ValueError):
        join_segments([1], [1], 1)
    with pytest.raises(ValueError):
        join_segments([1, 5], [1, 2, 4, 8], 2)
    with pytest.raises(ValueError):
        join_segments([0], [1, 2], 2)


def test_difference_sequence_golden():
    assert difference_sequence(Params(5, 1)).tolist() == golden.DIFF_5_1
    assert difference_sequence(Params(6, 2)).tolist() == golden.DIFF_6_2
    assert difference_sequence(Params(7, 3)).tolist() == golden.DIFF_7_3


def test_difference_sequence_small_width():
    # n - k = 1: single segment per level.
    assert difference_sequence(Params(4, 3)).tolist() == [4, 2, 1]
    assert difference_sequence(Params(3, 2)).tolist() == [2, 1]


@pytest.mark.parametrize("n, k", [(5, 0), (5, 5), (1, 0), (1, 1), (64, 64)])
def test_difference_sequence_single_member(n, k):
    assert len(difference_sequence(Params(n, k))) == 0


def test_combination_sequence_golden():
    assert combination_sequence(Params(5, 1)).tolist() == golden.SEQ_5_1
    assert combination_sequence(Params(6, 2)).tolist() == golden.SEQ_6_2
    assert combination_sequence(Params(7, 3)).tolist() == golden.SEQ_7_3
    assert combination_sequence(Params(8, 4)).tolist() == golden.SEQ_8_4
    assert combination_sequence(Params(5, 0)).tolist() == [0]
    assert combination_sequence(Params(5, 5)).tolist() == [31]


def test_combination_sequence_matches_filter_oracle():
    for n in range(1, 17):
        for k in range(n + 1):
            params = Params(n, k)
            assert np.array_equal(combination_sequence(params).values, filter_by_popcount(params).values)


def test_full_width_words():
    seq = combination_sequence(Params(64, 1)).tolist()
    assert seq == [1 << p for p in range(64)]
    seq = combination_sequence(Params(64, 63)).tolist()
    assert seq[0] == (1 << 63) - 1
    assert seq[-1] == (1 << 64) - 2
    assert all(v.bit_count() == 63 for v in seq)
    assert combination_sequence(Params(64, 64)).tolist() == [(1 << 64) - 1]


@pytest.mark.parametrize(
    "width, level, expected",
    [(4, 1, [1, 2, 3, 4]), (4, 2, [1, 3, 6, 10]), (4, 3, [1, 4, 10, 20]), (5, 0, [1] * 5)],
)
def test_segment_lengths_at_level(width, level, expected):
    got = segment_lengths_at_level(width, level)
    assert got.lengths == expected
    assert got.level == level


def test_segment_lengths_rejects_bad_input():
    with pytest.raises(ValueError):
        segment_lengths_at_level(0, 1)
    with pytest.raises(ValueError):
        segment_lengths_at_level(3, -1)


def test_capacity_guard():
    with pytest.raises(CapacityError):
        difference_sequence(Params(20, 10), max_elements=math.comb(20, 10) - 1)
    with pytest.raises(CapacityError):
        combination_sequence(Params(64, 32))
    assert len(combination_sequence(Params(20, 10), max_elements=math.comb(20, 10))) == math.comb(20, 10)


@pytest.mark.parametrize("n, k", [(0, 0), (65, 1), (5, 6), (5, -1)])
def test_invalid_params(n, k):
    with pytest.raises(InvalidParams):
        Params(n, k)


def test_params_endpoints():
    p = Params(8, 4)
    assert p.first == 15
    assert p.last == 240
