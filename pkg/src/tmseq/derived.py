"""Ternary square-free sequences derived from Thue-Morse, and unary encodings.

Two three-letter sequences come from marking repeated adjacent symbols of
M: ``theta`` rewrites the second symbol of each 00/11 to 2, ``vartheta``
the first.  ``v`` counts the 1s between consecutive 0s of M and equals
``w``, a letter permutation of vartheta.  ``method_a_encode`` turns any
square-free word over three positive integers into a binary sequence of
0-separated 1-runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

import numpy as np

from .thue_morse import _flip_bytes
from .words import UsageError, Word, relabel

__all__ = [
    "SequenceSpec",
    "RunLengthProfile",
    "theta_prefix",
    "vartheta_prefix",
    "v_prefix",
    "w_prefix",
    "beta_prefix",
    "theta_to_tm",
    "vartheta_to_tm",
    "method_a_encode",
    "alpha_prefix",
    "run_length_profile",
]

FAMILIES = (
    "M",
    "THETA",
    "VARTHETA",
    "V",
    "W",
    "BETA",
    "METHOD_A",
    "SEEDED_FLIP",
    "KAPPA",
)


@dataclass(frozen=True)
class SequenceSpec:
    """Declarative description of one of the infinite sequences.

    ``parameters`` is family-specific: a digit triple for METHOD_A, a
    seed string for SEEDED_FLIP, a gap triple (plus options) for KAPPA.
    Equal specs generate identical prefixes.
    """

    family: str
    parameters: tuple = ()

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "METHOD_A":
            if len(self.parameters) != 3 or len(set(self.parameters)) != 3 or min(self.parameters) < 1:
                raise UsageError("METHOD_A needs three distinct positive integers")


def _tm_array(n: int) -> np.ndarray:
    return np.frombuffer(_flip_bytes(n), dtype=np.uint8)


def theta_prefix(n: int) -> Word:
    """First n symbols of theta: M with the second symbol of 00/11 set to 2.

    Well defined because M never contains 000 or 111, so markings never
    chain.
    """
    if n < 0:
        raise UsageError("length must be >= 0")
    m = _tm_array(n)
    out = m.copy()
    if n >= 2:
        out[1:][m[1:] == m[:-1]] = 2
    return Word(out.tobytes(), 3)


def vartheta_prefix(n: int) -> Word:
    """First n symbols of vartheta: M with the first symbol of 00/11 set to 2.

    Looks one symbol ahead, so n+1 symbols of M are consumed.
    """
    if n < 0:
        raise UsageError("length must be >= 0")
    m = _tm_array(n + 1)
    out = m[:n].copy()
    if n >= 1:
        out[m[:n] == m[1 : n + 1]] = 2
    return Word(out.tobytes(), 3)


def v_prefix(n: int) -> Word:
    """Counts of 1s strictly between consecutive 0s of M, as a ternary word.

    Output symbol j is the count between the j-th and (j+1)-th zero
    (0-indexed); M is cube-free so every count is 0, 1 or 2.
    """
    if n < 0:
        raise UsageError("length must be >= 0")
    if n == 0:
        return Word(b"", 3)
    # zeros have density ~1/2 in M; grow until n+1 of them are in view
    length = 4 * n + 8
    while True:
        m = _tm_array(length)
        zeros = np.flatnonzero(m == 0)
        if len(zeros) >= n + 1:
            break
        length *= 2
    counts = np.diff(zeros[: n + 1]) - 1
    return Word(counts.astype(np.uint8).tobytes(), 3)


def w_prefix(n: int) -> Word:
    """vartheta with letters 0,1,2 replaced by 2,0,1; equal to v."""
    return relabel(vartheta_prefix(n), {0: 2, 1: 0, 2: 1})


def beta_prefix(n: int) -> Word:
    """theta with letters 0,1,2 replaced by 1,2,3 (symbol 0 unused)."""
    return relabel(theta_prefix(n), {0: 1, 1: 2, 2: 3})


def theta_to_tm(theta: Word) -> Word:
    """Invert the theta marking: a 2 at position i repeats symbol i-1."""
    out = bytearray(theta.symbols)
    for i, s in enumerate(out):
        if s == 2:
            if i == 0:
                raise UsageError("theta cannot start with 2")
            out[i] = out[i - 1]
    return Word(bytes(out), 2)


def vartheta_to_tm(vartheta: Word) -> Word:
    """Invert the vartheta marking: a 2 at position i copies symbol i+1.

    If the final symbol is marked, its value depends on the symbol after
    the prefix; the recovered word is then one symbol shorter.
    """
    out = bytearray(vartheta.symbols)
    n = len(out)
    if n and out[n - 1] == 2:
        out = out[: n - 1]
        n -= 1
    for i in range(n - 1, -1, -1):
        if out[i] == 2:
            out[i] = out[i + 1]
    return Word(bytes(out), 2)


@dataclass(frozen=True)
class RunLengthProfile:
    """Maximal-run decomposition of a binary word: (symbol, length) pairs."""

    run_lengths: tuple[tuple[int, int], ...]

    def interior_one_runs(self) -> list[int]:
        """Lengths of 1-runs that are followed by a 0 (i.e. complete runs)."""
        runs = self.run_lengths
        return [length for i, (sym, length) in enumerate(runs) if sym == 1 and i + 1 < len(runs)]


def run_length_profile(w: Word) -> RunLengthProfile:
    pairs = tuple((sym, len(list(grp))) for sym, grp in groupby(w.symbols))
    return RunLengthProfile(run_lengths=pairs)


def method_a_encode(digits: Word, count: int) -> Word:
    """Unary-encode a square-free digit word: 1-runs of each digit, single-0 separators.

    The digit word is rejected, with a witness, if it contains a square;
    the construction's guarantees only hold for square-free input.  The
    output is truncated to exactly ``count`` symbols, mid-run if needed.
    """
    if count < 0:
        raise UsageError("count must be >= 0")
    if len(digits) and min(digits.symbols) < 1:
        raise UsageError("digits must be positive integers")
    from .repetitions import find_square_naive, find_squares_all

    if len(digits) <= 512:
        witness = find_square_naive(digits)
    else:
        report = find_squares_all(digits)
        witness = report.squares[0] if report.squares else None
    if witness is not None:
        raise UsageError(
            f"digit word contains a square: root {witness.root.to_list()} at {witness.start}"
        )
    buf = bytearray()
    for i, d in enumerate(digits.symbols):
        if i:
            buf.append(0)
        buf += b"\x01" * d
        if len(buf) >= count:
            break
    if len(buf) < count:
        raise UsageError(f"digit word too short: encodes only {len(buf)} < {count} symbols")
    return Word(bytes(buf[:count]), 2)


def alpha_prefix(n: int, triple: tuple[int, int, int] = (1, 2, 3)) -> Word:
    """Method A applied to beta with letters 1,2,3 mapped onto ``triple``."""
    spec = SequenceSpec("METHOD_A", tuple(triple))  # validates the triple
    d1, d2, d3 = spec.parameters
    if n == 0:
        return Word(b"", 2)
    # each digit contributes at least min(triple)+1 symbols
    need = n // (min(triple) + 1) + 2
    while True:
        digits = relabel(beta_prefix(need), {1: d1, 2: d2, 3: d3})
        total = sum(digits.symbols) + len(digits) - 1
        if total >= n:
            return method_a_encode(digits, n)
        need *= 2
