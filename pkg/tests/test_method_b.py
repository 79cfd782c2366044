import pytest

from tmseq import (
    KappaLayout,
    MethodBConfig,
    UsageError,
    Word,
    decode_section,
    encode_block,
    enumerate_blocks,
    kappa_layout,
    kappa_prefix,
    run_length_profile,
)
from tmseq.method_b import default_gap_sequence
from tmseq.repetitions import is_square_free_naive

KAPPA_23 = "11001101100101001101001"


def test_default_gaps_are_square_free():
    gaps = default_gap_sequence((2, 3, 4), 7)
    assert gaps == (2, 3, 4, 2, 3, 2, 4)
    assert is_square_free_naive(Word.from_ints(gaps, 5))


def test_kappa_prefix_23():
    assert kappa_prefix(None, 23).to_str() == KAPPA_23


def test_kappa_prefixes_nest():
    long = kappa_prefix(None, 2000)
    for n in (0, 1, 23, 500, 1999):
        assert kappa_prefix(None, n) == long[:n]


def test_enumerate_blocks_order():
    blocks = [b.to_str() for b in enumerate_blocks(2)]
    assert blocks == ["22", "21", "12", "11"]
    assert len(enumerate_blocks(5)) == 32


def test_encode_block():
    u = Word.from_ints([2, 1, 2], 3)
    out = encode_block(u, (2, 3))
    assert out.to_str() == "1100100011"
    with pytest.raises(UsageError):
        encode_block(u, (2,))
    with pytest.raises(UsageError):
        encode_block(u, (1, 3))


def test_config_validation():
    with pytest.raises(UsageError):
        MethodBConfig(gap_values=(2, 2, 3))
    with pytest.raises(UsageError):
        MethodBConfig(gap_values=(1, 2, 3))
    with pytest.raises(UsageError):
        MethodBConfig(block_order="asc-lex")


def test_custom_gap_values_change_run_census():
    base = kappa_prefix(MethodBConfig(gap_values=(2, 3, 4)), 5000)
    wide = kappa_prefix(MethodBConfig(gap_values=(5, 6, 7)), 5000)
    # drop the final run: truncation can cut a gap short
    zero_runs = lambda w: {L for s, L in run_length_profile(w).run_lengths[:-1] if s == 0}
    assert zero_runs(base) == {1, 2, 3, 4}
    assert zero_runs(wide) == {1, 5, 6, 7}


def test_layout_round_trip():
    layout = kappa_layout(MethodBConfig(), 4)
    assert isinstance(layout, KappaLayout)
    # separators really hold single 0s bounded by 1s
    raw = layout.rendered.symbols
    for pos in layout.separator_positions:
        assert raw[pos] == 0
        assert raw[pos - 1] == 1 and raw[pos + 1] == 1
    # sections cover start_section..last_section
    assert [n for n, _ in layout.sections] == [2, 3, 4]


def test_decode_section_round_trip():
    config = MethodBConfig()
    gaps = config.gaps(2)
    blocks = enumerate_blocks(3)
    rendered = b"\x00".join(encode_block(u, gaps).symbols for u in blocks)
    decoded_blocks, decoded_gaps = decode_section(Word(rendered, 2))
    assert decoded_blocks == blocks
    assert decoded_gaps == gaps


def test_decode_section_rejects_ragged_input():
    with pytest.raises(UsageError):
        decode_section(Word.from_str("110110011", 2))
