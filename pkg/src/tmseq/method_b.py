"""The kappa construction: enumerate {1,2}-blocks, encode with 0-gaps.

Section n lists all 2^n words over {1,2}; each word becomes 1-runs of its
digits with 0-runs of lengths a_1, ..., a_{n-1} in between, where (a_i)
is a square-free sequence over three integers >= 2.  Blocks, and
sections, are joined by single 0s.  The within-block gap at position i is
a_i for every block of every section.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .derived import theta_prefix
from .words import UsageError, Word, relabel

__all__ = [
    "MethodBConfig",
    "KappaLayout",
    "default_gap_sequence",
    "enumerate_blocks",
    "encode_block",
    "kappa_prefix",
    "kappa_layout",
    "decode_section",
]

BLOCK_ORDERS = ("desc-lex",)


def default_gap_sequence(gap_values: tuple[int, int, int], count: int) -> tuple[int, ...]:
    """theta relabeled onto the gap triple; square-free by construction."""
    mapping = {0: gap_values[0], 1: gap_values[1], 2: gap_values[2]}
    return tuple(relabel(theta_prefix(count), mapping).symbols)


@dataclass(frozen=True)
class MethodBConfig:
    gap_values: tuple[int, int, int] = (2, 3, 4)
    block_order: str = "desc-lex"
    start_section: int = 2
    # None means: theta relabeled onto gap_values
    gap_sequence: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if len(set(self.gap_values)) != 3 or min(self.gap_values) < 2:
            raise UsageError("gap_values must be three distinct integers >= 2")
        if self.block_order not in BLOCK_ORDERS:
            raise UsageError(f"unknown block order {self.block_order!r}")
        if self.start_section < 1:
            raise UsageError("start_section must be >= 1")

    def gaps(self, count: int) -> tuple[int, ...]:
        if self.gap_sequence is not None:
            if len(self.gap_sequence) < count:
                raise UsageError(f"configured gap sequence too short: need {count}")
            return self.gap_sequence[:count]
        return default_gap_sequence(self.gap_values, count)


def enumerate_blocks(n: int, order: str = "desc-lex") -> list[Word]:
    """All 2^n words over {1,2} in a deterministic order (2 before 1)."""
    if n < 1:
        raise UsageError("section index must be >= 1")
    if order not in BLOCK_ORDERS:
        raise UsageError(f"unknown block order {order!r}")
    return [Word(bytes(t), 3) for t in product((2, 1), repeat=n)]


def encode_block(u: Word, gaps: list[int] | tuple[int, ...]) -> Word:
    """1^{u_1} 0^{a_1} 1^{u_2} ... 0^{a_{n-1}} 1^{u_n}."""
    if len(gaps) != len(u) - 1:
        raise UsageError(f"need {len(u) - 1} gaps for a block of length {len(u)}, got {len(gaps)}")
    if any(g < 2 for g in gaps):
        raise UsageError("gaps must be >= 2")
    if any(d not in (1, 2) for d in u.symbols):
        raise UsageError("block digits must be 1 or 2")
    buf = bytearray()
    for i, d in enumerate(u.symbols):
        if i:
            buf += b"\x00" * gaps[i - 1]
        buf += b"\x01" * d
    return Word(bytes(buf), 2)


def _section_bytes(config: MethodBConfig, n: int) -> bytes:
    gaps = config.gaps(n - 1)
    parts = [encode_block(u, gaps).symbols for u in enumerate_blocks(n, config.block_order)]
    return b"\x00".join(parts)


def kappa_prefix(config: MethodBConfig | None = None, n: int = 0) -> Word:
    """First n symbols of kappa: sections joined by single 0s."""
    if config is None:
        config = MethodBConfig()
    if n < 0:
        raise UsageError("length must be >= 0")
    buf = bytearray()
    section = config.start_section
    while len(buf) < n:
        if buf:
            buf.append(0)
        buf += _section_bytes(config, section)
        section += 1
    return Word(bytes(buf[:n]), 2)


@dataclass(frozen=True)
class KappaLayout:
    """Fully rendered sections with the positions of the single separator 0s."""

    config: MethodBConfig
    sections: tuple[tuple[int, tuple[Word, ...]], ...]  # (n, blocks of A_n)
    separator_positions: tuple[int, ...]
    rendered: Word


def kappa_layout(config: MethodBConfig | None = None, last_section: int = 3) -> KappaLayout:
    """Render sections start..last_section completely, tracking separators."""
    if config is None:
        config = MethodBConfig()
    if last_section < config.start_section:
        raise UsageError("last_section must be >= start_section")
    buf = bytearray()
    seps: list[int] = []
    sections = []
    for n in range(config.start_section, last_section + 1):
        if buf:
            seps.append(len(buf))
            buf.append(0)
        gaps = config.gaps(n - 1)
        blocks = enumerate_blocks(n, config.block_order)
        for i, u in enumerate(blocks):
            if i:
                seps.append(len(buf))
                buf.append(0)
            buf += encode_block(u, gaps).symbols
        sections.append((n, tuple(blocks)))
    return KappaLayout(
        config=config,
        sections=tuple(sections),
        separator_positions=tuple(seps),
        rendered=Word(bytes(buf), 2),
    )


def decode_section(section: Word) -> tuple[list[Word], tuple[int, ...]]:
    """Parse one fully rendered section back into (blocks, gap prefix).

    0-runs of length 1 are block separators; longer 0-runs are the
    within-block gaps a_1 .. a_{n-1} (all >= 2 by construction), so the
    parse is unambiguous.
    """
    from .derived import run_length_profile

    runs = run_length_profile(section).run_lengths
    blocks: list[list[int]] = [[]]
    gaps_per_block: list[list[int]] = [[]]
    for sym, length in runs:
        if sym == 1:
            if length not in (1, 2):
                raise UsageError(f"1-run of length {length} is not a valid digit")
            blocks[-1].append(length)
        elif length == 1:
            blocks.append([])
            gaps_per_block.append([])
        else:
            gaps_per_block[-1].append(length)
    widths = {len(b) for b in blocks}
    if len(widths) != 1:
        raise UsageError(f"blocks have mixed widths {sorted(widths)}; not a complete section")
    gap_sets = {tuple(g) for g in gaps_per_block}
    if len(gap_sets) != 1:
        raise UsageError("inconsistent gap pattern across blocks")
    return [Word(bytes(b), 3) for b in blocks], gap_sets.pop()
