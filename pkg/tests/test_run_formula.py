import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.core.errors import InvalidInput, InvalidShift
from src.core.run_formula import (
    autocorr_profile,
    autocorr_via_runs,
    closed_form_wt_diff,
    expansion_identities,
    gamma_P,
    gamma_P_append,
    gamma_P_k,
    gamma_table,
    table_rows,
    wt_diff_via_runs,
)
from src.core.sequence import (
    BinarySequence,
    RunWord,
    autocorr_bruteforce,
    autocorr_bruteforce_profile,
    decompose_runs,
    parse_sequence,
    shift,
    weight,
    xor,
)
from tests.reference import all_sequences, gamma_P_by_compositions, gamma_P_k_by_compositions

PERIOD_24 = "110100000011001010111100"

GAMMA_P_ROW = [0, -6] + [0] * 9 + [5, -10, 5] + [0] * 9 + [-6]
WT_DIFF_ROW = [12] + [0] * 10 + [10, -10] + [0] * 10 + [-12]
WT_ROW = [12] * 11 + [22] + [12] * 11 + [0]
AUTOCORR_ROW = [0] * 11 + [-20] + [0] * 11 + [24]

bit_lists = st.lists(st.integers(min_value=0, max_value=1), min_size=2, max_size=40)


def wt_shift(s: BinarySequence, t: int) -> int:
    return weight(xor(s, shift(s, t)))


def test_period_24_run_table_rows():
    rows = table_rows(parse_sequence(PERIOD_24))
    assert list(rows.gamma_p) == GAMMA_P_ROW
    assert list(rows.wt_diff) == WT_DIFF_ROW
    assert list(rows.wt) == WT_ROW
    assert list(rows.autocorr) == AUTOCORR_ROW


def test_gamma_table_agrees_with_single_coefficients():
    rw = decompose_runs(parse_sequence(PERIOD_24))
    table = gamma_table(rw, 23)
    assert [gamma_P(rw, t) for t in range(1, 24)] == list(table.values)
    assert table.at(12) == -10
    with pytest.raises(InvalidInput):
        table.at(24)


@pytest.mark.parametrize("period", range(2, 15))
def test_run_formula_matches_oracle_exhaustively(period):
    for s in all_sequences(period):
        rw = decompose_runs(s)
        for t in range(1, period + 1):
            assert autocorr_via_runs(rw, period, t) == autocorr_bruteforce(s, t % period)
            assert wt_diff_via_runs(rw, t) == wt_shift(s, t) - wt_shift(s, t - 1)


@pytest.mark.parametrize("period", range(1, 15))
def test_profile_matches_oracle_exhaustively(period):
    for value in range(1 << period):
        s = BinarySequence.from_int(value, period)
        assert autocorr_profile(s) == autocorr_bruteforce_profile(s)


@settings(max_examples=60, deadline=None)
@given(bits=bit_lists)
def test_profile_matches_oracle(bits):
    s = BinarySequence.from_bits(bits)
    assert autocorr_profile(s) == autocorr_bruteforce_profile(s)


@settings(max_examples=60, deadline=None)
@given(bits=st.lists(st.integers(min_value=0, max_value=1), min_size=2, max_size=14))
def test_gamma_P_matches_composition_sum(bits):
    assume(0 < sum(bits) < len(bits))
    rw = decompose_runs(BinarySequence.from_bits(bits))
    for t in range(1, min(rw.period, 10) + 1):
        assert gamma_P(rw, t) == gamma_P_by_compositions(rw, t)


@settings(max_examples=40, deadline=None)
@given(bits=st.lists(st.integers(min_value=0, max_value=1), min_size=2, max_size=12))
def test_gamma_P_k_matches_composition_indexed_sum(bits):
    assume(0 < sum(bits) < len(bits))
    rw = decompose_runs(BinarySequence.from_bits(bits))
    for t in range(2, min(rw.period, 9) + 1):
        for k in range(t):
            assert gamma_P_k(rw, t, k) == gamma_P_k_by_compositions(rw, t, k)


def test_gamma_P_k_domain():
    rw = RunWord((1, 1), 1)
    with pytest.raises(InvalidInput):
        gamma_P_k(rw, 1, 0)
    with pytest.raises(InvalidInput):
        gamma_P_k(rw, 3, 3)
    with pytest.raises(InvalidInput):
        gamma_P_append(rw, 0, 1)


def test_autocorr_via_runs_domain():
    rw = decompose_runs(parse_sequence("1110"))
    with pytest.raises(InvalidInput):
        autocorr_via_runs(rw, 5, 1)
    with pytest.raises(InvalidShift):
        autocorr_via_runs(rw, 4, 0)
    with pytest.raises(InvalidShift):
        autocorr_via_runs(rw, 4, 5)
    assert autocorr_via_runs(rw, 4, 4) == 4


def test_constant_sequences_use_the_oracle():
    assert autocorr_profile(parse_sequence("0000")) == (4, 4, 4, 4)
    assert autocorr_profile(parse_sequence("1")) == (1,)


@settings(max_examples=60, deadline=None)
@given(bits=bit_lists)
def test_closed_forms_for_small_shifts(bits):
    assume(0 < sum(bits) < len(bits))
    s = BinarySequence.from_bits(bits)
    rw = decompose_runs(s)
    for t in (2, 3, 4):
        if t > s.period:
            break
        assert closed_form_wt_diff(rw, t) == wt_shift(s, t) - wt_shift(s, t - 1)


@pytest.mark.parametrize("period", range(2, 13))
def test_closed_forms_match_oracle_exhaustively(period):
    for s in all_sequences(period):
        rw = decompose_runs(s)
        for t in range(2, min(period, 4) + 1):
            assert closed_form_wt_diff(rw, t) == wt_shift(s, t) - wt_shift(s, t - 1), (str(s), t)


def test_run_formula_matches_oracle_on_long_random_sequences():
    rng = np.random.default_rng(20240501)
    checked = 0
    while checked < 10_000:
        period = int(rng.integers(15, 65))
        bits = rng.integers(0, 2, size=period).tolist()
        if not 0 < sum(bits) < period:
            continue
        s = BinarySequence.from_bits(bits)
        oracle = autocorr_bruteforce_profile(s)
        table = gamma_table(decompose_runs(s), period - 1)
        assert table.autocorrelations() == list(oracle[1:]) + [period], str(s)
        weights = [(period - c) // 2 for c in oracle[1:]] + [0]
        assert list(table.wt_diffs()) == [weights[0]] + [weights[t] - weights[t - 1] for t in range(1, period)], str(s)
        checked += 1


def test_closed_form_domain():
    with pytest.raises(InvalidInput):
        closed_form_wt_diff(RunWord((1, 1), 1), 5)


@pytest.mark.parametrize("period", range(2, 11))
def test_expansion_identities_hold_exhaustively(period):
    for s in all_sequences(period):
        for check in expansion_identities(decompose_runs(s), 10):
            assert check.holds, f"{s}: {check}"


def test_expansion_identities_cover_every_family():
    rw = decompose_runs(parse_sequence(PERIOD_24))
    checks = list(expansion_identities(rw, 6))
    names = {check.name for check in checks}
    assert names == {
        "gamma^0 equals weight difference",
        "k = 0 recurrence",
        "gamma^k recurrence",
        "last-part decomposition",
        "gamma^(t-1) closed value",
        "unrolled recurrence",
    }
    assert all(check.holds for check in checks)
    assert max(check.t for check in checks) == 6
    assert "==" in str(checks[0])


def test_expansion_identities_cap_at_period():
    rw = decompose_runs(parse_sequence("1100"))
    assert max(check.t for check in expansion_identities(rw, 10)) == 4


def test_weight_rows_are_consistent():
    rw = decompose_runs(parse_sequence(PERIOD_24))
    table = gamma_table(rw, 23)
    diffs = table.wt_diffs()
    assert len(diffs) == 24
    assert table.weights()[-1] == 0
    assert sum(diffs) == 0
