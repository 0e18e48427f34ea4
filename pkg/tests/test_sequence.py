import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from src.core.errors import DegenerateSequence, InvalidInput, InvalidShift, PeriodMismatch
from src.core.sequence import (
    BinarySequence,
    RunPattern,
    RunWord,
    autocorr_bruteforce,
    autocorr_bruteforce_profile,
    canonical_rotation,
    count_pattern,
    count_pattern_extended,
    decompose_runs,
    parse_run_word,
    parse_sequence,
    parse_sequence_literal,
    pattern_counts,
    run_length_counts,
    shift,
    weight,
    xor,
)

PERIOD_24 = "110100000011001010111100"
EXAMPLE_36 = "000101001000111110011010110111000001"
EXAMPLE_76 = "0011000001000010010111100010111010110001001111101111011010000111010001010011"

bit_lists = st.lists(st.integers(min_value=0, max_value=1), min_size=1, max_size=24)


def non_constant(bits):
    return 0 < sum(bits) < len(bits)


def test_parse_sequence():
    s = parse_sequence("1110")
    assert s.period == 4
    assert s.bits == (1, 1, 1, 0)
    assert str(s) == "1110"


def test_parse_sequence_reports_position():
    with pytest.raises(InvalidInput) as info:
        parse_sequence("01x1")
    assert info.value.position == 2
    assert "position 2" in str(info.value)


def test_parse_empty_sequence():
    with pytest.raises(InvalidInput):
        parse_sequence("")


def test_packed_value_is_msb_first():
    s = parse_sequence("1000")
    assert s.value == 8
    assert BinarySequence.from_int(8, 4) == s
    assert BinarySequence.from_int(1, 4).bits == (0, 0, 0, 1)


def test_from_int_rejects_overflow():
    with pytest.raises(InvalidInput):
        BinarySequence.from_int(16, 4)


def test_shift_and_xor():
    s = parse_sequence("1100")
    assert str(shift(s, 1)) == "1001"
    assert str(shift(s, -1)) == "0110"
    assert str(xor(s, shift(s, 1))) == "0101"
    with pytest.raises(PeriodMismatch):
        xor(s, parse_sequence("110"))


@pytest.mark.parametrize(
    "text, profile",
    [
        ("1110", (4, 0, 0, 0)),
        ("0001", (4, 0, 0, 0)),
        ("1100", (4, 0, -4, 0)),
        ("1111", (4, 4, 4, 4)),
        ("1110100", (7, -1, -1, -1, -1, -1, -1)),
    ],
)
def test_bruteforce_profile(text, profile):
    assert autocorr_bruteforce_profile(parse_sequence(text)) == profile


def test_bruteforce_shift_range():
    s = parse_sequence("1110")
    with pytest.raises(InvalidShift):
        autocorr_bruteforce(s, 4)
    with pytest.raises(InvalidShift):
        autocorr_bruteforce(s, -1)


@given(bits=bit_lists, w=st.integers(min_value=0, max_value=100))
def test_profile_is_symmetric_and_has_period_parity(bits, w):
    s = BinarySequence.from_bits(bits)
    n = s.period
    w %= n
    c = autocorr_bruteforce(s, w)
    assert c == autocorr_bruteforce(s, (n - w) % n)
    assert (c - n) % 2 == 0


def test_decompose_period_24_sequence():
    rw = decompose_runs(parse_sequence(PERIOD_24))
    assert rw.lengths == (2, 1, 1, 6, 2, 2, 1, 1, 1, 1, 4, 2)
    assert rw.start_symbol == 1
    assert rw.start_offset == 0
    assert rw.gamma == 12


def test_decompose_run_wrapping_position_zero():
    # the run of 1s wraps from the end of the period to its start
    rw = decompose_runs(parse_sequence("1001"))
    assert rw.lengths == (2, 2)
    assert rw.start_symbol == 1
    assert rw.start_offset == 1
    assert str(rw.expand()) == "1001"


def test_decompose_constant_sequence():
    with pytest.raises(DegenerateSequence):
        decompose_runs(parse_sequence("0000"))


@given(bits=bit_lists)
def test_decompose_round_trip(bits):
    assume(non_constant(bits))
    s = BinarySequence.from_bits(bits)
    rw = decompose_runs(s)
    assert rw.expand() == s
    assert rw.period == s.period
    assert rw.gamma % 2 == 0


@given(bits=bit_lists)
def test_run_lengths_account_for_every_symbol(bits):
    assume(non_constant(bits))
    s = BinarySequence.from_bits(bits)
    rw = decompose_runs(s)
    ones = run_length_counts(rw, symbol=1)
    zeros = run_length_counts(rw, symbol=0)
    assert sum(i * count for i, count in ones.items()) == weight(s)
    assert sum(i * count for i, count in zeros.items()) == s.period - weight(s)
    assert sum(ones.values()) == sum(zeros.values()) == rw.gamma // 2


def test_run_word_literal():
    rw = parse_run_word("1:2,1,1,6,2,2,1,1,1,1,4,2")
    assert str(rw.expand()) == PERIOD_24
    assert str(rw) == "1:2,1,1,6,2,2,1,1,1,1,4,2"
    assert parse_sequence_literal(" 1:2,1,1,6,2,2,1,1,1,1,4,2 ") == parse_sequence(PERIOD_24)


@pytest.mark.parametrize("text", ["1:2,1,1", "1:2,0", "2:1,1", "2,1", "1:a,b"])
def test_bad_run_word_literal(text):
    with pytest.raises(InvalidInput):
        parse_run_word(text)


def test_run_word_requires_even_run_count():
    with pytest.raises(InvalidInput):
        RunWord((1, 2, 3), 1)


@pytest.mark.parametrize(
    "text, counts",
    [
        (PERIOD_24, {(1,): 6, (2,): 4, (1, 1): 4}),
        (EXAMPLE_36, {(1,): 9, (2,): 4, (3,): 3, (5,): 2, (1, 1): 4, (1, 2): 2, (1, 1, 1): 2, (2, 1): 3}),
        (EXAMPLE_76, {(1,): 19, (2,): 8, (3,): 5, (4,): 4, (5,): 2,
                      (1, 1): 8, (1, 1, 1): 2, (2, 1): 2, (1, 2): 5}),
    ],
)
def test_pattern_counts_of_worked_examples(text, counts):
    rw = decompose_runs(parse_sequence(text))
    for lengths, expected in counts.items():
        assert count_pattern(rw, RunPattern(lengths)) == expected


def test_pattern_longer_than_run_word_wraps():
    rw = RunWord((1, 2), 1)
    assert count_pattern(rw, RunPattern((1, 2, 1, 2, 1))) == 1
    assert count_pattern(rw, RunPattern((2, 1, 2))) == 1
    assert count_pattern(rw, RunPattern((1, 1))) == 0


def test_count_pattern_extended():
    rw = decompose_runs(parse_sequence(PERIOD_24))
    # R_{>=1} R_1 R_j with j >= 1 is N_s(R_1)
    assert count_pattern_extended(rw, 1, (1,), range(1, 100)) == 6
    assert count_pattern_extended(rw, 2, (), {1}) == count_pattern(rw, RunPattern((2, 1))) + count_pattern(
        rw, RunPattern((4, 1))) + count_pattern(rw, RunPattern((6, 1)))


@given(bits=bit_lists)
def test_pattern_counts_sum_to_gamma_per_length(bits):
    assume(non_constant(bits))
    rw = decompose_runs(BinarySequence.from_bits(bits))
    counts = pattern_counts(rw, 3)
    for runs in (1, 2, 3):
        assert sum(c for key, c in counts.items() if len(key) == runs) == rw.gamma


def test_canonical_rotation():
    assert str(canonical_rotation(parse_sequence("1000"))) == "0001"
    assert str(canonical_rotation(parse_sequence("1101"))) == "0111"


def test_absorptive_laws_on_random_sequences():
    rng = np.random.default_rng(1729)
    checked = 0
    while checked < 300:
        period = int(rng.integers(2, 65))
        bits = rng.integers(0, 2, size=period).tolist()
        if not 0 < sum(bits) < period:
            continue
        rw = decompose_runs(BinarySequence.from_bits(bits))
        longest = max(rw.lengths)
        for lengths, count in pattern_counts(rw, 2).items():
            assert count == count_pattern(rw, RunPattern(lengths))
            before = sum(count_pattern(rw, RunPattern((i,) + lengths)) for i in range(1, longest + 1))
            after = sum(count_pattern(rw, RunPattern(lengths + (i,))) for i in range(1, longest + 1))
            assert before == count, (str(rw), lengths)
            assert after == count, (str(rw), lengths)
        checked += 1
