import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from catalancode import BitSourceExhausted, ReplayBitSource, SeededBitSource, ValidationError, uniform_below
from catalancode.randomness import as_bit_source
from catalancode.table import code_width


def test_k_one_reads_nothing():
    src = ReplayBitSource("")
    assert uniform_below(1, src) == 0
    assert src.bits_consumed == 0


def test_power_of_two_no_rejection():
    src = ReplayBitSource("10")
    assert uniform_below(4, src) == 2
    assert src.bits_consumed == 2


def test_rejection_redraws():
    src = ReplayBitSource("111010")
    assert uniform_below(5, src) == 2
    assert src.bits_consumed == 6


def test_exhaustion():
    with pytest.raises(BitSourceExhausted):
        uniform_below(5, ReplayBitSource("111"))


def test_rejects_zero_range():
    with pytest.raises(ValidationError):
        uniform_below(0, ReplayBitSource("0"))


@pytest.mark.parametrize("k", range(1, 9))
def test_exact_uniformity_by_expansion(k):
    # Feed every bit string of three attempts' length.  A string's unread
    # tail is irrelevant, so counting full strings weights each accepting
    # prefix by its probability; all outcomes must get the same weight.
    width = code_width(k)
    depth = 3 * width
    hits = Counter()
    for bits in itertools.product("01", repeat=depth):
        src = ReplayBitSource("".join(bits))
        try:
            v = uniform_below(k, src)
        except BitSourceExhausted:
            continue
        assert 0 <= v < k
        assert src.bits_consumed % width == 0 if width else src.bits_consumed == 0
        hits[v] += 1
    assert set(hits) == set(range(k))
    assert len(set(hits.values())) == 1


@pytest.mark.parametrize("k", range(1, 9))
def test_prefix_measure_is_equal(k):
    # Same expansion counted on distinct accepting prefixes: every outcome has
    # exactly one accepting prefix per attempt depth.
    width = code_width(k)
    per_outcome = Counter()
    for attempts in range(1, 4):
        for bits in itertools.product("01", repeat=attempts * width):
            src = ReplayBitSource("".join(bits))
            try:
                v = uniform_below(k, src)
            except BitSourceExhausted:
                continue
            if src.bits_consumed == len(bits):
                per_outcome[(attempts, v)] += 1
        if width == 0:
            break
    counts = {}
    for (attempts, v), c in per_outcome.items():
        counts.setdefault(attempts, set()).add(c)
    for attempts, values in counts.items():
        assert len(values) == 1, (k, attempts, values)


def test_seed_stream_is_pinned():
    # MT19937 seeded with 0, two 32-bit words, most significant bit first.
    assert SeededBitSource(0).read_bits(64) == 15576833789872009150
    assert format(SeededBitSource(2 ** 64 - 1).read_bits(40), "010x") == "05965e7e3f"


@given(st.integers(0, 2 ** 64 - 1), st.lists(st.integers(0, 70), max_size=8))
def test_read_bits_matches_next_bit(seed, chunks):
    a, b = SeededBitSource(seed), SeededBitSource(seed)
    for k in chunks:
        expected = 0
        for _ in range(k):
            expected = (expected << 1) | b.next_bit()
        assert a.read_bits(k) == expected
    assert a.bits_consumed == b.bits_consumed == sum(chunks)


def test_same_seed_same_draws():
    draws = [[uniform_below(1430, src) for _ in range(50)] for src in (SeededBitSource(7), SeededBitSource(7))]
    assert draws[0] == draws[1]


def test_seed_range():
    with pytest.raises(ValidationError):
        SeededBitSource(2 ** 64)
    with pytest.raises(ValidationError):
        SeededBitSource(-1)


def test_counter_counts_every_bit():
    src = ReplayBitSource("1011")
    for n in range(1, 5):
        src.next_bit()
        assert src.bits_consumed == n


def test_replay_from_hex():
    src = ReplayBitSource.from_hex("a5")
    assert src.bits == "10100101"
    assert ReplayBitSource.from_hex("0x0f").bits == "00001111"
    with pytest.raises(ValidationError):
        ReplayBitSource.from_hex("zz")


def test_replay_rejects_non_bits():
    with pytest.raises(ValidationError):
        ReplayBitSource("012")


def test_as_bit_source():
    src = ReplayBitSource("1")
    assert as_bit_source(src) is src
    assert isinstance(as_bit_source(3), SeededBitSource)
    assert isinstance(as_bit_source(None), SeededBitSource)


def test_average_attempts_below_two():
    src = SeededBitSource(11)
    k = 2 ** 20 + 1  # worst case: almost half of every draw is rejected
    n = 2000
    for _ in range(n):
        uniform_below(k, src)
    attempts = src.bits_consumed / code_width(k) / n
    assert attempts < 2.2
