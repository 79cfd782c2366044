import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmseq import (
    UsageError,
    Word,
    complement,
    factor_set,
    occurrences,
    relabel,
    right_special_census,
    subword_complexity,
)

words = st.builds(
    lambda syms, extra: Word(bytes(syms), (max(syms) if syms else 0) + 1 + extra),
    st.lists(st.integers(0, 3), max_size=40),
    st.integers(0, 2),
)


def test_from_str_round_trip():
    w = Word.from_str("0120", 3)
    assert w.to_str() == "0120"
    assert w.to_list() == [0, 1, 2, 0]
    assert len(w) == 4


def test_symbol_out_of_range_rejected():
    with pytest.raises(UsageError):
        Word(bytes([0, 2]), 2)


def test_slicing_returns_word():
    w = Word.from_str("011010", 2)
    assert w[1:4] == Word.from_str("110", 2)
    assert w[2] == 1


def test_occurrences_overlapping(m_16):
    occ = occurrences(m_16, Word.from_str("1001", 2))
    assert occ.positions == (4, 8)
    assert occ.text_length == 16
    # self-overlapping pattern: every start must be reported
    aaa = Word.from_str("aaaa".replace("a", "0"), 2)
    assert occurrences(aaa, Word.from_str("00", 2)).positions == (0, 1, 2)


def test_factor_set_counts(m_16):
    fs = factor_set(m_16, 2)
    assert {w.to_str() for w in fs.members} == {"01", "11", "10", "00"}
    assert fs.word_length == 2


def test_subword_complexity_prefix_values(m_16):
    assert subword_complexity(m_16, 3) == [2, 4, 6]


def test_right_special_census_binary(m_64k):
    counts = right_special_census(m_64k, 6)
    assert counts == [2, 2, 4, 2, 4, 4]


def test_complement_swaps():
    assert complement(Word.from_str("0110", 2)) == Word.from_str("1001", 2)
    with pytest.raises(UsageError):
        complement(Word.from_str("012", 3))


def test_relabel_alphabet_grows():
    w = relabel(Word.from_str("012", 3), {0: 1, 1: 2, 2: 3})
    assert w.to_str() == "123"
    assert w.alphabet_size == 4


def test_relabel_requires_total_mapping():
    with pytest.raises(UsageError):
        relabel(Word.from_str("012", 3), {0: 1, 1: 2})


@given(words, st.integers(1, 6))
def test_factor_set_members_do_occur(w, n):
    if n > len(w):
        return
    for f in factor_set(w, n).members:
        assert occurrences(w, f).positions


@given(words)
def test_complexity_monotone_in_content(w):
    if len(w) < 3:
        return
    p = subword_complexity(w, 3)
    # at most one new factor per start position
    assert p[1] <= p[0] + (len(w) - 2)
    assert all(c >= 1 for c in p)
