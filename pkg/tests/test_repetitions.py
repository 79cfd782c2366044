import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tmseq import (
    UsageError,
    Word,
    check_no_overlapping_occurrences,
    classify_tm_squares,
    find_square_naive,
    find_squares_all,
    is_cube_free,
    is_cube_free_naive,
    is_overlap_free,
    is_overlap_free_naive,
    leftmost_square,
    max_power,
    maximal_runs,
    theta_prefix,
    tm_prefix_flip,
)
from tmseq.repetitions import find_squares_naive_all, is_square_free_naive

random_words = st.builds(
    lambda syms, sigma: Word(bytes(s % sigma for s in syms), sigma),
    st.lists(st.integers(0, 3), max_size=80),
    st.integers(2, 4),
)


def runs_to_square_set(w, runs):
    out = set()
    for start, end, period in runs:
        q = period
        while 2 * q <= end - start:
            for s in range(start, end - 2 * q + 1):
                out.add((s, q))
            q += period
    return out


def test_known_squares():
    assert find_square_naive(Word.from_str("0120102", 3)) is None
    witness = find_square_naive(Word.from_str("00110011", 2))
    assert witness.start == 0 and len(witness.root) == 1 and witness.exponent == 2


def test_leftmost_square_in_tm():
    m = tm_prefix_flip(64)
    fast = leftmost_square(m)
    naive = find_square_naive(m)
    assert (fast.start, fast.root) == (naive.start, naive.root) == (1, Word.from_str("1", 2))


def test_run_decomposition_simple():
    # 010010 at 0 (minimal period 3) plus the 00 at index 2
    assert maximal_runs(Word.from_str("010010", 2)) == [(0, 6, 3), (2, 4, 1)]
    assert maximal_runs(Word.from_str("0000", 2)) == [(0, 4, 1)]
    assert maximal_runs(Word.from_str("0120", 3)) == []


def test_overlap_and_cube_flags():
    ok, _ = is_overlap_free(Word.from_str("010101", 2))
    assert not ok
    ok, witness = is_cube_free(Word.from_str("010010", 2))
    assert ok and witness is None
    ok, witness = is_cube_free(Word.from_str("000", 2))
    assert not ok and witness.exponent == 3


def test_overlap_witness_has_extra_flag():
    ok, witness = is_overlap_free(Word.from_str("0110110", 2))
    assert not ok
    assert witness.overlap_extra
    assert witness.root == Word.from_str("011", 2)


def test_census_counts_every_start():
    report = find_squares_all(Word.from_str("0000", 2))
    assert report.census == {1: 3}
    assert not report.square_free and not report.cube_free and not report.overlap_free


def test_max_power():
    root, exponent, start = max_power(Word.from_str("1000001", 2), 3)
    assert (root.to_str(), exponent, start) == ("0", 5, 1)
    root, exponent, start = max_power(theta_prefix(100), 10)
    assert exponent == 1 and start == 0


def test_max_power_contract():
    with pytest.raises(UsageError):
        max_power(Word.from_str("01", 2), 0)
    with pytest.raises(UsageError):
        max_power(Word(b"", 2), 3)


def test_fast_matches_naive_bulk():
    rng = random.Random(20260823)
    for _ in range(600):
        sigma = rng.choice((2, 2, 3, 4))
        n = rng.randrange(0, 150)
        w = Word(bytes(rng.randrange(sigma) for _ in range(n)), sigma)
        naive = find_squares_naive_all(w)
        fast = runs_to_square_set(w, maximal_runs(w))
        assert fast == naive, w.to_str()
        assert is_overlap_free(w)[0] == is_overlap_free_naive(w)[0]
        assert is_cube_free(w)[0] == is_cube_free_naive(w)[0]


@given(random_words)
@settings(max_examples=200)
def test_fast_matches_naive_property(w):
    assert runs_to_square_set(w, maximal_runs(w)) == find_squares_naive_all(w)


@given(random_words)
@settings(max_examples=200)
def test_leftmost_matches_naive_property(w):
    naive = find_square_naive(w)
    fast = leftmost_square(w)
    if naive is None:
        assert fast is None
    else:
        assert (fast.start, fast.root) == (naive.start, naive.root)


@given(random_words)
@settings(max_examples=100)
def test_square_free_iff_no_runs(w):
    assert find_squares_all(w).square_free == is_square_free_naive(w)


def test_runs_are_maximal_and_minimal_period():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(2, 100)
        raw = bytes(rng.randrange(2) for _ in range(n))
        w = Word(raw, 2)
        for start, end, period in maximal_runs(w):
            frag = raw[start:end]
            assert len(frag) >= 2 * period
            assert frag[:-period] == frag[period:]
            # minimal
            for p in range(1, period):
                if frag[:-p] == frag[p:]:
                    pytest.fail(f"period {period} not minimal in {w.to_str()}")
            # maximal
            if start > 0:
                assert raw[start - 1] != raw[start - 1 + period]
            if end < n:
                assert raw[end] != raw[end - period]


def test_classify_tm_squares_structure():
    census = classify_tm_squares(256)
    assert census.prefix_length == 256
    # power-of-two roots always classify as partition blocks
    for entry in census.entries:
        plen = len(entry.root)
        if plen & (plen - 1) == 0:
            assert entry.classification == "PARTITION_SIMILAR"
            assert entry.k == plen.bit_length() - 1
        else:
            assert entry.classification == "OTHER"
            assert entry.k is None
    # the length-3 root at index 63 from the brute-force scan
    assert any(e.start == 63 and e.root.to_str() == "010" for e in census.other_entries)


def test_classify_counts_match_entries():
    census = classify_tm_squares(512)
    assert sum(census.counts.values()) == len(census.entries)


def test_no_overlapping_occurrences_in_tm():
    m = tm_prefix_flip(4096)
    assert check_no_overlapping_occurrences(m, 32) == []


def test_overlapping_occurrences_detected():
    w = Word.from_str("000", 2)
    violations = check_no_overlapping_occurrences(w, 2)
    assert (Word.from_str("00", 2), 0, 1) in violations
