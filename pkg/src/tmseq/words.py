"""Finite words over small integer alphabets, plus factor-level scans.

A :class:`Word` is an immutable sequence of symbols, each a small
unsigned integer strictly below the word's ``alphabet_size``.  Symbols
are stored one byte each, so words up to tens of millions of symbols are
cheap.  Everything downstream (generators, repetition detection,
recurrence statistics) works on this one currency.

All functions here are pure; a Word is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

__all__ = [
    "UsageError",
    "IntegrityError",
    "Word",
    "OccurrenceList",
    "LanguageSet",
    "occurrences",
    "factor_set",
    "subword_complexity",
    "right_special_census",
    "complement",
    "relabel",
]

# factor-set scans refuse window lengths above this to bound memory
MAX_FACTOR_LENGTH = 64

_TO_DIGITS = bytes.maketrans(bytes(range(10)), b"0123456789")
_FROM_DIGITS = bytes.maketrans(b"0123456789", bytes(range(10)))
_BINARY_SWAP = bytes.maketrans(b"\x00\x01", b"\x01\x00")


class UsageError(ValueError):
    """An operation was called outside its contract (caller error)."""


class IntegrityError(RuntimeError):
    """Input data violated a structural guarantee it was claimed to have."""


@dataclass(frozen=True)
class Word:
    """An immutable finite word over the alphabet ``{0, ..., alphabet_size-1}``."""

    symbols: bytes
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 1 or self.alphabet_size > 256:
            raise UsageError(f"alphabet_size must be in 1..256, got {self.alphabet_size}")
        if self.symbols and max(self.symbols) >= self.alphabet_size:
            raise UsageError(
                f"symbol {max(self.symbols)} out of range for alphabet of size {self.alphabet_size}"
            )

    # -- constructors ------------------------------------------------

    @classmethod
    def from_str(cls, text: str, alphabet_size: int | None = None) -> "Word":
        """Parse an ASCII digit string, one character per symbol."""
        raw = text.encode("ascii").translate(_FROM_DIGITS)
        if raw and max(raw) > 9:
            raise UsageError(f"non-digit character in word string {text!r}")
        if alphabet_size is None:
            alphabet_size = (max(raw) + 1) if raw else 2
        return cls(bytes(raw), alphabet_size)

    @classmethod
    def from_ints(cls, values: Sequence[int], alphabet_size: int | None = None) -> "Word":
        if alphabet_size is None:
            alphabet_size = (max(values) + 1) if len(values) else 2
        try:
            raw = bytes(values)
        except ValueError as exc:
            raise UsageError(f"symbols must be unsigned bytes: {exc}") from None
        return cls(raw, alphabet_size)

    # -- sequence protocol -------------------------------------------

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.symbols[item], self.alphabet_size)
        return self.symbols[item]

    def __str__(self) -> str:
        return self.to_str()

    # -- serialization (ASCII digits and JSON integer lists) ----------

    def to_str(self) -> str:
        """Render as ASCII digits; only defined for alphabets of size <= 10."""
        if self.alphabet_size > 10:
            raise UsageError("ASCII digit rendering requires alphabet_size <= 10")
        return self.symbols.translate(_TO_DIGITS).decode("ascii")

    def to_list(self) -> list[int]:
        return list(self.symbols)


@dataclass(frozen=True)
class OccurrenceList:
    """All start positions (0-based, increasing) of a pattern in a text."""

    pattern: Word
    text_length: int
    positions: tuple[int, ...]


@dataclass(frozen=True)
class LanguageSet:
    """The set of length-``word_length`` factors of some word."""

    word_length: int
    members: frozenset[Word]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: Word) -> bool:
        return w in self.members


def occurrences(text: Word, pattern: Word) -> OccurrenceList:
    """Every start index where ``pattern`` occurs in ``text``.

    Overlapping occurrences are all reported.  The scan advances one
    position past each match, so it is exhaustive.
    """
    if len(pattern) == 0:
        raise UsageError("occurrences: pattern must be nonempty")
    hay, needle = text.symbols, pattern.symbols
    out: list[int] = []
    i = hay.find(needle)
    while i != -1:
        out.append(i)
        i = hay.find(needle, i + 1)
    return OccurrenceList(pattern=pattern, text_length=len(text), positions=tuple(out))


def _check_factor_length(text: Word, n: int) -> None:
    if n < 1 or n > len(text):
        raise UsageError(f"factor length {n} out of range 1..{len(text)}")
    if n > MAX_FACTOR_LENGTH:
        raise UsageError(f"factor length {n} exceeds cap {MAX_FACTOR_LENGTH}")


def factor_set(text: Word, n: int) -> LanguageSet:
    """All distinct length-``n`` factors (subwords) of ``text``.

    Windows are compared exactly (byte equality), never by hash alone.
    """
    _check_factor_length(text, n)
    raw = text.symbols
    seen = {raw[i : i + n] for i in range(len(raw) - n + 1)}
    members = frozenset(Word(b, text.alphabet_size) for b in seen)
    return LanguageSet(word_length=n, members=members)


def subword_complexity(text: Word, n_max: int) -> list[int]:
    """Factor counts p(1), ..., p(n_max).

    Not guaranteed monotone for arbitrary finite text, so no such
    property is asserted here.
    """
    if n_max < 1 or n_max > len(text):
        raise UsageError(f"n_max {n_max} out of range 1..{len(text)}")
    return [len(factor_set(text, n)) for n in range(1, n_max + 1)]


def right_special_census(text: Word, n_max: int) -> list[int]:
    """Per length n <= n_max, how many length-n factors are right-special.

    A factor w is right-special in ``text`` when at least two distinct
    symbols s give ws again a factor of ``text``.
    """
    if n_max < 1 or n_max + 1 > len(text):
        raise UsageError(f"right_special_census needs n_max + 1 <= |text|, got n_max={n_max}")
    raw = text.symbols
    counts: list[int] = []
    for n in range(1, n_max + 1):
        extensions: dict[bytes, set[int]] = {}
        for i in range(len(raw) - n):
            extensions.setdefault(raw[i : i + n], set()).add(raw[i + n])
        counts.append(sum(1 for s in extensions.values() if len(s) >= 2))
    return counts


def complement(w: Word) -> Word:
    """Swap 0 and 1 pointwise; only defined on binary words."""
    if w.alphabet_size != 2:
        raise UsageError("complement is only defined for binary words")
    return Word(w.symbols.translate(_BINARY_SWAP), 2)


def relabel(w: Word, mapping: Mapping[int, int]) -> Word:
    """Apply a symbol map pointwise.

    Every symbol occurring in ``w`` must be mapped; the output alphabet
    size is one more than the largest mapped value.
    """
    present = set(w.symbols)
    missing = present - set(mapping)
    if missing:
        raise UsageError(f"relabel: symbols {sorted(missing)} have no image")
    table = bytearray(range(256))
    for src, dst in mapping.items():
        if not (0 <= src < 256 and 0 <= dst < 256):
            raise UsageError(f"relabel: symbol map entry {src}->{dst} out of byte range")
        table[src] = dst
    out_alpha = max(mapping.values(), default=0) + 1
    return Word(w.symbols.translate(bytes(table)), max(out_alpha, 1))
