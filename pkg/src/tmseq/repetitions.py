"""Square, cube and overlap detection, plus the Thue-Morse square census.

Two routes are kept deliberately separate: the naive scans here are
exhaustive quadratic/cubic oracles, while the fast path delegates to a
divide-and-conquer run detector (``tmseq._kernels``) and must agree with
the oracle wherever both run.

A *run* is a maximal periodic fragment (start, end, minimal period) with
length >= twice the period; every square, cube and overlap occurrence is
readable off the run list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .thue_morse import partition_block, tm_prefix_flip
from .words import UsageError, Word

__all__ = [
    "SquareWitness",
    "RepetitionReport",
    "find_square_naive",
    "find_squares_naive_all",
    "is_square_free_naive",
    "is_overlap_free_naive",
    "is_cube_free_naive",
    "maximal_runs",
    "find_squares_all",
    "is_overlap_free",
    "is_cube_free",
    "max_power",
    "classify_tm_squares",
    "check_no_overlapping_occurrences",
]


@dataclass(frozen=True)
class SquareWitness:
    """A repetition occurrence: ``root`` repeated ``exponent`` times at ``start``.

    ``overlap_extra`` is True when the symbol right after the repetition
    equals the root's first symbol (the BBb pattern).
    """

    start: int
    root: Word
    exponent: int
    overlap_extra: bool


@dataclass(frozen=True)
class RepetitionReport:
    text_length: int
    squares: tuple[SquareWitness, ...]
    square_free: bool
    cube_free: bool
    overlap_free: bool
    census: dict[int, int] = field(default_factory=dict)  # primitive root length -> occurrence count


def _extend_witness(raw: bytes, start: int, root_len: int, alphabet_size: int) -> SquareWitness:
    """Canonical witness at a given start/root: maximal exponent, overlap flag."""
    root = raw[start : start + root_len]
    exponent = 1
    pos = start + root_len
    while raw[pos : pos + root_len] == root:
        exponent += 1
        pos += root_len
    extra = pos < len(raw) and raw[pos] == root[0]
    return SquareWitness(
        start=start,
        root=Word(root, alphabet_size),
        exponent=exponent,
        overlap_extra=extra,
    )


# -- naive oracles (ground truth; intentionally simple) -------------------


def find_square_naive(text: Word) -> SquareWitness | None:
    """Leftmost square, shortest root on ties, by exhaustive scanning."""
    raw = text.symbols
    n = len(raw)
    for start in range(n - 1):
        for root_len in range(1, (n - start) // 2 + 1):
            if raw[start : start + root_len] == raw[start + root_len : start + 2 * root_len]:
                return _extend_witness(raw, start, root_len, text.alphabet_size)
    return None


def find_squares_naive_all(text: Word) -> set[tuple[int, int]]:
    """Every square occurrence as (start, root_length), exhaustively. Slow."""
    raw = text.symbols
    n = len(raw)
    out = set()
    for start in range(n - 1):
        for root_len in range(1, (n - start) // 2 + 1):
            if raw[start : start + root_len] == raw[start + root_len : start + 2 * root_len]:
                out.add((start, root_len))
    return out


def is_square_free_naive(text: Word) -> bool:
    return find_square_naive(text) is None


def is_overlap_free_naive(text: Word) -> tuple[bool, SquareWitness | None]:
    raw = text.symbols
    n = len(raw)
    for start in range(n):
        for root_len in range(1, (n - start - 1) // 2 + 1):
            if (
                raw[start : start + root_len] == raw[start + root_len : start + 2 * root_len]
                and raw[start + 2 * root_len] == raw[start]
            ):
                return False, _extend_witness(raw, start, root_len, text.alphabet_size)
    return True, None


def is_cube_free_naive(text: Word) -> tuple[bool, SquareWitness | None]:
    raw = text.symbols
    n = len(raw)
    for start in range(n):
        for root_len in range(1, (n - start) // 3 + 1):
            root = raw[start : start + root_len]
            if (
                root == raw[start + root_len : start + 2 * root_len]
                and root == raw[start + 2 * root_len : start + 3 * root_len]
            ):
                return False, _extend_witness(raw, start, root_len, text.alphabet_size)
    return True, None


# -- fast path over maximal runs ------------------------------------------


def maximal_runs(text: Word) -> list[tuple[int, int, int]]:
    """All maximal runs (start, end, minimal period), canonically sorted."""
    if len(text) < 2:
        return []
    from ._kernels import find_runs

    arr = np.frombuffer(text.symbols, dtype=np.uint8)
    return find_runs(arr)


def _witness_from_run(raw: bytes, run: tuple[int, int, int], alphabet_size: int) -> SquareWitness:
    start, end, period = run
    length = end - start
    return SquareWitness(
        start=start,
        root=Word(raw[start : start + period], alphabet_size),
        exponent=length // period,
        overlap_extra=length % period >= 1,
    )


def find_squares_all(text: Word) -> RepetitionReport:
    """Report every square via the run decomposition.

    Witnesses are one per run, canonicalized by (start, root length);
    the census counts, per primitive root length, every start position
    where such a square begins.
    """
    raw = text.symbols
    runs = maximal_runs(text)
    witnesses = tuple(_witness_from_run(raw, r, text.alphabet_size) for r in runs)
    census: dict[int, int] = {}
    cube_free = True
    overlap_free = True
    for start, end, period in runs:
        length = end - start
        census[period] = census.get(period, 0) + (length - 2 * period + 1)
        if length >= 3 * period:
            cube_free = False
        if length > 2 * period:
            overlap_free = False
    return RepetitionReport(
        text_length=len(text),
        squares=witnesses,
        square_free=not runs,
        cube_free=cube_free,
        overlap_free=overlap_free,
        census=dict(sorted(census.items())),
    )


def leftmost_square(text: Word) -> SquareWitness | None:
    """Fast-path leftmost square (shortest root on ties); matches the oracle."""
    runs = maximal_runs(text)
    if not runs:
        return None
    start, _end, period = min(runs, key=lambda r: (r[0], r[2]))
    return _extend_witness(text.symbols, start, period, text.alphabet_size)


def is_overlap_free(text: Word) -> tuple[bool, SquareWitness | None]:
    """No BBb anywhere; a run longer than twice its period is a counterexample."""
    offenders = [r for r in maximal_runs(text) if r[1] - r[0] > 2 * r[2]]
    if not offenders:
        return True, None
    start, _end, period = min(offenders, key=lambda r: (r[0], r[2]))
    return False, _extend_witness(text.symbols, start, period, text.alphabet_size)


def is_cube_free(text: Word) -> tuple[bool, SquareWitness | None]:
    offenders = [r for r in maximal_runs(text) if r[1] - r[0] >= 3 * r[2]]
    if not offenders:
        return True, None
    start, _end, period = min(offenders, key=lambda r: (r[0], r[2]))
    return False, _extend_witness(text.symbols, start, period, text.alphabet_size)


def max_power(text: Word, max_root: int) -> tuple[Word, int, int]:
    """The repetition root^exponent with maximal exponent over roots <= max_root.

    Returns (root, exponent, start); ties favour the leftmost start,
    then the shortest root.  A repetition-free text yields exponent 1
    with its first symbol as the root.
    """
    if max_root < 1:
        raise UsageError("max_root must be >= 1")
    if len(text) == 0:
        raise UsageError("max_power needs a nonempty text")
    best: tuple[int, int, int] | None = None  # (-exponent, start, period)
    for start, end, period in maximal_runs(text):
        if period > max_root:
            continue
        exponent = (end - start) // period
        key = (-exponent, start, period)
        if best is None or key < best:
            best = key
    if best is None:
        return text[0:1], 1, 0
    exponent, start, period = -best[0], best[1], best[2]
    return text[start : start + period], exponent, start


# -- Thue-Morse specific audits --------------------------------------------


@dataclass(frozen=True)
class TMSquareEntry:
    start: int
    root: Word
    classification: str  # "PARTITION_SIMILAR" or "OTHER"
    k: int | None  # block-size exponent when classification is PARTITION_SIMILAR


@dataclass(frozen=True)
class TMSquareCensus:
    prefix_length: int
    entries: tuple[TMSquareEntry, ...]
    counts: dict[str, int]

    @property
    def other_entries(self) -> list[TMSquareEntry]:
        return [e for e in self.entries if e.classification == "OTHER"]


def classify_tm_squares(prefix_len: int) -> TMSquareCensus:
    """Census of every square occurrence in the Thue-Morse prefix.

    Each occurrence is PARTITION_SIMILAR(k) when its root has length 2^k
    and is symbol-wise similar to an aligned block, OTHER otherwise.
    This audit reports; it asserts nothing about OTHER being empty (and
    indeed roots of length 3 * 2^k do occur).
    """
    if prefix_len < 4:
        raise UsageError("need prefix_len >= 4")
    text = tm_prefix_flip(prefix_len)
    raw = text.symbols
    blocks: dict[int, tuple[bytes, bytes]] = {}
    entries: list[TMSquareEntry] = []
    counts: dict[str, int] = {}
    for start, end, period in maximal_runs(text):
        # M is overlap-free so runs have length exactly 2p: one occurrence each
        for occ in range(start, end - 2 * period + 1):
            root = raw[occ : occ + period]
            label = "OTHER"
            k: int | None = None
            if period & (period - 1) == 0:
                kk = period.bit_length() - 1
                if kk not in blocks:
                    blocks[kk] = (
                        partition_block(kk, "X").symbols,
                        partition_block(kk, "Y").symbols,
                    )
                if root in blocks[kk]:
                    label = "PARTITION_SIMILAR"
                    k = kk
            entries.append(
                TMSquareEntry(start=occ, root=Word(root, 2), classification=label, k=k)
            )
            key = f"PARTITION_SIMILAR(k={k})" if label == "PARTITION_SIMILAR" else f"OTHER(len={period})"
            counts[key] = counts.get(key, 0) + 1
    entries.sort(key=lambda e: (e.start, len(e.root)))
    return TMSquareCensus(
        prefix_length=prefix_len,
        entries=tuple(entries),
        counts=dict(sorted(counts.items())),
    )


def check_no_overlapping_occurrences(text: Word, max_len: int) -> list[tuple[Word, int, int]]:
    """Pairs of intersecting similar blocks: consecutive occurrences of a
    factor w at distance < |w|, for every |w| <= max_len.

    Returns (factor, first_start, second_start) triples in scan order.
    Implemented as a direct occurrence scan, independent of the run
    detector, so it double-checks the same structure a different way.
    """
    if max_len > len(text):
        raise UsageError("max_len must be <= |text|")
    raw = text.symbols
    n = len(raw)
    violations: list[tuple[Word, int, int]] = []
    for ell in range(1, max_len + 1):
        last: dict[bytes, int] = {}
        for i in range(n - ell + 1):
            key = raw[i : i + ell]
            prev = last.get(key)
            if prev is not None and i - prev < ell:
                violations.append((Word(key, text.alphabet_size), prev, i))
            last[key] = i
    return violations
