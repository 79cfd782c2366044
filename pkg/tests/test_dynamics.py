import pytest

from tmseq import (
    UsageError,
    Word,
    alpha_prefix,
    language_disjointness,
    occurrence_gaps,
    occurrences,
    periodicity_witness,
    relative_density_check,
    theta_prefix,
    tm_prefix_flip,
    uniform_recurrence_bound,
)
from tmseq.dynamics import _gap_stats_python


def test_occurrence_gaps_basic(m_16):
    report = occurrence_gaps(m_16, Word.from_str("0", 2))
    assert report.occurrence_count == 8
    assert report.max_gap == 3
    assert report.sufficient


def test_occurrence_gaps_insufficient(m_16):
    report = occurrence_gaps(m_16, Word.from_str("0110100110010110", 2))
    assert report.occurrence_count == 1
    assert not report.sufficient
    assert report.max_gap is None


def test_recurrence_on_tm(m_64k):
    report = uniform_recurrence_bound(m_64k, 6)
    assert report.all_recur()
    assert report.n_bound[1] == 3
    assert report.worst_gap[2] == 8
    for ell in range(1, 6):
        assert report.worst_gap[ell + 1] >= report.worst_gap[ell]
        assert report.factors_absent_later[ell] == ()


def test_recurrence_detects_transient_factor():
    # "11" occurs only at the very start
    w = Word.from_str("110101010101010101010101", 2)
    report = uniform_recurrence_bound(w, 2)
    assert not report.all_recur()
    singles = report.factors_absent_later[2]
    assert Word.from_str("11", 2) in singles


def test_recurrence_fast_path_matches_python():
    m = tm_prefix_flip(1 << 15)  # above the fast-path threshold
    fast = uniform_recurrence_bound(m, 8)
    for ell in range(1, 9):
        worst, distinct, singles = _gap_stats_python(m.symbols, ell, 2)
        assert fast.worst_gap[ell] == worst
        assert tuple(w.symbols for w in fast.factors_absent_later[ell]) == tuple(singles)


def test_recurrence_window_precondition():
    with pytest.raises(UsageError):
        uniform_recurrence_bound(tm_prefix_flip(64), 17)


def test_relative_density():
    m = tm_prefix_flip(256)
    occ = occurrences(m, Word.from_str("0", 2))
    assert relative_density_check(occ, 2)
    assert not relative_density_check(occ, 1)


def test_relative_density_tail_matters():
    w = Word.from_str("0100000000", 2)
    occ = occurrences(w, Word.from_str("1", 2))
    assert not relative_density_check(occ, 3)


def test_periodicity_witness_absent_in_tm():
    assert periodicity_witness(tm_prefix_flip(1 << 12), 64, 3) is None


def test_periodicity_witness_found():
    w = Word.from_str("0101010101", 2)
    witness = periodicity_witness(w, 4, 4)
    assert witness is not None
    assert witness.exponent >= 4
    assert len(witness.root) <= 4


def test_periodicity_witness_contract():
    with pytest.raises(UsageError):
        periodicity_witness(tm_prefix_flip(16), 4, 2)


def test_language_disjointness_self():
    m = tm_prefix_flip(512)
    shared = language_disjointness(m, m, 4)
    assert len(shared) == 10  # p(4) for the Thue-Morse language


def test_language_disjointness_alpha_triples():
    a = alpha_prefix(4000, (1, 2, 3))
    b = alpha_prefix(4000, (4, 5, 6))
    assert language_disjointness(a, b, 8) == frozenset()
    assert language_disjointness(a, b, 3)


def test_language_disjointness_ignores_alphabet_size():
    binary = tm_prefix_flip(64)
    ternary = theta_prefix(64)
    shared = language_disjointness(binary, ternary, 2)
    # theta contains 01 and 10, and so does M, regardless of alphabet field
    assert Word.from_str("01", 2) in {Word(w.symbols, 2) for w in shared}
