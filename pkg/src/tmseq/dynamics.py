"""Recurrence and minimality diagnostics over finite windows.

Nothing here certifies minimality: finite windows cannot establish the
hypothesis of Gottschalk-style results.  The reports say "uniformly
recurrent up to (factor length, window)" and leave it at that.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .repetitions import SquareWitness, _extend_witness, maximal_runs
from .words import OccurrenceList, UsageError, Word, factor_set

__all__ = [
    "GapReport",
    "RecurrenceReport",
    "occurrence_gaps",
    "uniform_recurrence_bound",
    "relative_density_check",
    "periodicity_witness",
    "language_disjointness",
]


@dataclass(frozen=True)
class GapReport:
    """Start-to-start distances between consecutive occurrences of a pattern."""

    pattern: Word
    occurrence_count: int
    gaps: tuple[int, ...]
    max_gap: int | None
    sufficient: bool  # False when fewer than two occurrences were seen


def occurrence_gaps(text: Word, pattern: Word) -> GapReport:
    from .words import occurrences

    occ = occurrences(text, pattern)
    positions = occ.positions
    if len(positions) < 2:
        return GapReport(
            pattern=pattern,
            occurrence_count=len(positions),
            gaps=(),
            max_gap=None,
            sufficient=False,
        )
    gaps = tuple(b - a for a, b in zip(positions, positions[1:]))
    return GapReport(
        pattern=pattern,
        occurrence_count=len(positions),
        gaps=gaps,
        max_gap=max(gaps),
        sufficient=True,
    )


@dataclass(frozen=True)
class RecurrenceReport:
    """Per-factor-length worst occurrence gaps over a finite window.

    ``n_bound(l) = worst_gap(l) + l - 1``: every window of that many
    symbols inside the observed prefix contained every length-l factor.
    Factors seen only once have no gap to report and are listed in
    ``factors_absent_later`` instead of being extrapolated.
    """

    window_length: int
    max_len: int
    worst_gap: dict[int, int | None]
    n_bound: dict[int, int | None]
    factors_absent_later: dict[int, tuple[Word, ...]]

    def all_recur(self, up_to: int | None = None) -> bool:
        top = up_to if up_to is not None else self.max_len
        return all(
            not self.factors_absent_later[l] and self.worst_gap[l] is not None
            for l in range(1, top + 1)
        )


def _gap_stats_python(raw: bytes, ell: int, alphabet_size: int):
    last: dict[bytes, int] = {}
    count: dict[bytes, int] = {}
    worst = -1
    for i in range(len(raw) - ell + 1):
        key = raw[i : i + ell]
        prev = last.get(key)
        if prev is None:
            count[key] = 1
        else:
            gap = i - prev
            if gap > worst:
                worst = gap
            count[key] += 1
        last[key] = i
    singles = sorted(k for k, c in count.items() if c == 1)
    return (None if worst < 0 else worst), len(count), singles


def uniform_recurrence_bound(text: Word, max_len: int) -> RecurrenceReport:
    """Worst occurrence gaps for every factor length up to ``max_len``."""
    if max_len < 1 or max_len > len(text) // 4:
        raise UsageError("need 1 <= max_len <= |text| / 4 for meaningful gap statistics")
    raw = text.symbols
    bits = max(1, (text.alphabet_size - 1).bit_length())
    worst_gap: dict[int, int | None] = {}
    n_bound: dict[int, int | None] = {}
    absent: dict[int, tuple[Word, ...]] = {}
    use_fast = len(raw) >= 1 << 14
    if use_fast:
        from ._kernels import gap_stats_fast

        arr = np.frombuffer(raw, dtype=np.uint8)
    for ell in range(1, max_len + 1):
        if use_fast and ell * bits <= 64:
            worst, _distinct, singles = gap_stats_fast(arr, ell, text.alphabet_size)
        else:
            worst, _distinct, singles = _gap_stats_python(raw, ell, text.alphabet_size)
        worst_gap[ell] = worst
        n_bound[ell] = None if worst is None else worst + ell - 1
        absent[ell] = tuple(Word(b, text.alphabet_size) for b in singles)
    return RecurrenceReport(
        window_length=len(text),
        max_len=max_len,
        worst_gap=worst_gap,
        n_bound=n_bound,
        factors_absent_later=absent,
    )


def relative_density_check(positions: OccurrenceList, k: int) -> bool:
    """Does every k+1 consecutive indices in the observation range meet the set?

    The observation range is every valid start index of the pattern,
    0 .. text_length - |pattern|.
    """
    if k < 0:
        raise UsageError("k must be >= 0")
    if not positions.positions:
        raise UsageError("relative_density_check needs at least one position")
    pts = positions.positions
    last_valid = positions.text_length - len(positions.pattern)
    if pts[0] > k:
        return False
    for a, b in zip(pts, pts[1:]):
        if b - a > k + 1:
            return False
    return last_valid - pts[-1] <= k


def periodicity_witness(
    text: Word, max_root: int, min_exponent: int
) -> SquareWitness | None:
    """A repetition root^exponent with exponent >= min_exponent, if any.

    Finite proxy for periodic-orbit hunting: absence of high powers.
    """
    if min_exponent < 3:
        raise UsageError("min_exponent must be >= 3")
    if max_root < 1:
        raise UsageError("max_root must be >= 1")
    hits = [
        (start, period)
        for start, end, period in maximal_runs(text)
        if period <= max_root and (end - start) // period >= min_exponent
    ]
    if not hits:
        return None
    start, period = min(hits)
    return _extend_witness(text.symbols, start, period, text.alphabet_size)


def language_disjointness(text_a: Word, text_b: Word, n: int) -> frozenset[Word]:
    """Shared length-n factors of two words (finite-depth orbit-language proxy)."""
    if n > min(len(text_a), len(text_b)):
        raise UsageError("n must be <= both text lengths")
    fa = factor_set(text_a, n).members
    fb = {w.symbols for w in factor_set(text_b, n).members}
    return frozenset(w for w in fa if w.symbols in fb)
