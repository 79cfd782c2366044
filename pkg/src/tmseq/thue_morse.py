"""The Thue-Morse sequence: four generators, partition blocks, look-alikes.

The sequence M = 0110100110010110... can be produced four ways (morphism
fixed point, binary-digit-sum parity, index recursion, block flipping);
``definitions_agree`` cross-checks them.  The flipping view partitions any
prefix of length k*2^j into aligned blocks that are always one of two
words; ``partition_decompose`` labels them and ``classify_lookalikes``
finds the unaligned impostors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .words import IntegrityError, UsageError, Word, complement

__all__ = [
    "PartitionView",
    "LookalikeOccurrence",
    "FlipSeed",
    "tm_term",
    "tm_prefix_morphism",
    "tm_prefix_recursive",
    "tm_prefix_flip",
    "tm_prefix_termwise",
    "definitions_agree",
    "partition_block",
    "partition_decompose",
    "classify_lookalikes",
    "lookalike_audit",
    "mirror_positions",
    "mirror_block_audit",
    "seeded_flip_prefix",
]

_SWAP01 = bytes.maketrans(b"\x00\x01", b"\x01\x00")


def _flip_bytes(n: int) -> bytes:
    """First n symbols of M by block doubling: W -> W + swap(W)."""
    if n < 0:
        raise UsageError("length must be >= 0")
    if n == 0:
        return b""
    buf = bytearray(b"\x00")
    while len(buf) < n:
        buf += buf.translate(_SWAP01)
    return bytes(buf[:n])


def tm_term(n: int) -> int:
    """n-th Thue-Morse symbol: parity of the popcount of n."""
    if n < 0:
        raise UsageError("index must be >= 0")
    return n.bit_count() & 1


def tm_prefix_morphism(n: int) -> Word:
    """Prefix of the fixed point of the morphism 0 -> 01, 1 -> 10."""
    if n < 0:
        raise UsageError("length must be >= 0")
    buf = bytearray(b"\x00")
    while len(buf) < n:
        image = bytearray(2 * len(buf))
        image[0::2] = buf                       # each s maps to s, 1-s
        image[1::2] = buf.translate(_SWAP01)
        buf = image
    return Word(bytes(buf[:n]), 2)


def tm_prefix_recursive(n: int) -> Word:
    """Prefix via M_0 = 0, M_{2k} = M_k, M_{2k+1} = 1 - M_k."""
    if n < 0:
        raise UsageError("length must be >= 0")
    out = bytearray(n)
    for i in range(1, n):
        half = out[i >> 1]
        out[i] = half if i & 1 == 0 else 1 - half
    return Word(bytes(out), 2)


def tm_prefix_flip(n: int) -> Word:
    """Prefix via the flipping rule M^{2^{j+1}} = M^{2^j} followed by its complement."""
    return Word(_flip_bytes(n), 2)


def tm_prefix_termwise(n: int) -> Word:
    """Prefix assembled symbol-by-symbol from popcount parity."""
    if n < 0:
        raise UsageError("length must be >= 0")
    return Word(bytes(i.bit_count() & 1 for i in range(n)), 2)


def definitions_agree(
    n: int, extra_generators: Sequence[Callable[[int], Word]] = ()
) -> tuple[bool, int | None]:
    """Do all four generators (plus any extras) emit the same length-n prefix?

    Returns ``(True, None)`` on agreement, otherwise ``(False, i)`` with i
    the first index where some generator disagrees with the flipping one.
    """
    if n < 1:
        raise UsageError("need n >= 1")
    reference = tm_prefix_flip(n).symbols
    candidates = [tm_prefix_morphism, tm_prefix_recursive, tm_prefix_termwise]
    candidates.extend(extra_generators)
    for gen in candidates:
        got = gen(n).symbols
        if got != reference:
            mismatch = next(i for i, (a, b) in enumerate(zip(reference, got)) if a != b)
            return False, mismatch
    return True, None


# -- partition blocks ----------------------------------------------------


def partition_block(k: int, which: str) -> Word:
    """The aligned block of length 2^k: "X" starts with 0, "Y" with 1.

    X_{k+1} = X_k Y_k and Y_{k+1} = Y_k X_k, from X_0 = 0, Y_0 = 1.
    """
    if k < 0:
        raise UsageError("k must be >= 0")
    if which not in ("X", "Y"):
        raise UsageError(f"which must be 'X' or 'Y', got {which!r}")
    x, y = b"\x00", b"\x01"
    for _ in range(k):
        x, y = x + y, y + x
    return Word(x if which == "X" else y, 2)


@dataclass(frozen=True)
class PartitionView:
    """A Thue-Morse prefix factored into aligned length-2^k blocks."""

    k: int
    labels: tuple[str, ...]  # "X" or "Y" per aligned block
    prefix_length: int

    def reconstruct(self) -> Word:
        x = partition_block(self.k, "X").symbols
        y = partition_block(self.k, "Y").symbols
        return Word(b"".join(x if lab == "X" else y for lab in self.labels), 2)


def partition_decompose(prefix: Word, k: int) -> PartitionView:
    """Label every aligned 2^k-block of a genuine Thue-Morse prefix.

    A block matching neither aligned word means the input was not really
    a Thue-Morse prefix; that is reported as an IntegrityError rather
    than silently classified.
    """
    if k < 0:
        raise UsageError("k must be >= 0")
    size = 1 << k
    if len(prefix) % size != 0:
        raise UsageError(f"prefix length {len(prefix)} is not a multiple of 2^{k}")
    x = partition_block(k, "X").symbols
    y = partition_block(k, "Y").symbols
    raw = prefix.symbols
    labels: list[str] = []
    for i in range(0, len(raw), size):
        block = raw[i : i + size]
        if block == x:
            labels.append("X")
        elif block == y:
            labels.append("Y")
        else:
            raise IntegrityError(
                f"aligned block at {i} is neither partition word; input is not a Thue-Morse prefix"
            )
    return PartitionView(k=k, labels=tuple(labels), prefix_length=len(prefix))


@dataclass(frozen=True)
class LookalikeOccurrence:
    """An unaligned occurrence of a word similar to an aligned block.

    ``kind`` is "X'" or "Y'".  ``surrounding`` is the 2^k-aligned window
    of length 2^{k+1} that starts at the aligned block containing the
    occurrence's first symbol.  ``centered_in`` is "YY" when the
    occurrence sits exactly centered in an aligned Y_k Y_k pair, "XX"
    for X_k X_k, else None.
    """

    kind: str
    start: int
    k: int
    surrounding: Word
    centered_in: str | None


def classify_lookalikes(prefix: Word, k: int) -> list[LookalikeOccurrence]:
    """Every unaligned occurrence of a word similar to X_k or Y_k."""
    if k < 0:
        raise UsageError("k must be >= 0")
    size = 1 << k
    if len(prefix) % size != 0:
        raise UsageError(f"prefix length {len(prefix)} is not a multiple of 2^{k}")
    raw = prefix.symbols
    x = partition_block(k, "X").symbols
    y = partition_block(k, "Y").symbols
    found: list[tuple[int, str]] = []
    for pattern, kind in ((x, "X'"), (y, "Y'")):
        i = raw.find(pattern)
        while i != -1:
            if i % size != 0:
                found.append((i, kind))
            i = raw.find(pattern, i + 1)
    found.sort()
    out: list[LookalikeOccurrence] = []
    half = size >> 1
    for start, kind in found:
        base = (start // size) * size
        window = raw[base : base + 2 * size]
        centered: str | None = None
        if k >= 1 and start % size == half and len(window) == 2 * size:
            pair_start = start - half
            left = raw[pair_start : pair_start + size]
            right = raw[pair_start + size : pair_start + 2 * size]
            if left == right == y:
                centered = "YY"
            elif left == right == x:
                centered = "XX"
        out.append(
            LookalikeOccurrence(
                kind=kind,
                start=start,
                k=k,
                surrounding=Word(window, 2),
                centered_in=centered,
            )
        )
    return out


def lookalike_audit(prefix: Word, k: int) -> dict:
    """Check the placement rule: every X' centered in Y_k Y_k, every Y' in X_k X_k.

    Returns counts and the list of exceptions (occurrences violating the
    rule); an empty exception list means the audit passed for this k.
    """
    occs = classify_lookalikes(prefix, k)
    exceptions = [
        o
        for o in occs
        if (o.kind == "X'" and o.centered_in != "YY")
        or (o.kind == "Y'" and o.centered_in != "XX")
    ]
    return {
        "k": k,
        "total": len(occs),
        "x_prime": sum(1 for o in occs if o.kind == "X'"),
        "y_prime": sum(1 for o in occs if o.kind == "Y'"),
        "exceptions": exceptions,
    }


def mirror_positions(n: int) -> list[int]:
    """Cut positions of the flipping construction: every power of two <= n.

    The initial cut after the single symbol 0 (position 1) is included.
    """
    if n < 1:
        raise UsageError("need n >= 1")
    out = []
    p = 1
    while p <= n:
        out.append(p)
        p <<= 1
    return out


def mirror_block_audit(prefix: Word, k: int) -> list[dict]:
    """Record the 2^{k+1}-blocks immediately before and after each mirror.

    After each mirror at position 2^j >= 2^{k+1} the block must be
    Y_k X_k; before it, either X_k Y_k or Y_k X_k occurs and which one is
    simply recorded, not asserted.
    """
    size2 = 1 << (k + 1)
    x = partition_block(k, "X").symbols
    y = partition_block(k, "Y").symbols
    xy, yx = x + y, y + x
    raw = prefix.symbols
    results = []
    for pos in mirror_positions(len(prefix)):
        if pos < size2 or pos + size2 > len(raw):
            continue
        before = raw[pos - size2 : pos]
        after = raw[pos : pos + size2]
        results.append(
            {
                "mirror": pos,
                "k": k,
                "before": "XY" if before == xy else ("YX" if before == yx else "?"),
                "after_is_yx": after == yx,
            }
        )
    return results


# -- seeded flipping (density construction) -------------------------------


@dataclass(frozen=True)
class FlipSeed:
    """A nonempty binary word used to seed the flipping construction."""

    seed: Word

    def __post_init__(self) -> None:
        if len(self.seed) == 0:
            raise UsageError("flip seed must be nonempty")
        if self.seed.alphabet_size != 2:
            raise UsageError("flip seed must be binary")


def seeded_flip_prefix(seed: FlipSeed | Word, n: int) -> Word:
    """Run the doubling rule W -> W + complement(W) from an arbitrary seed.

    Seed "0" recovers the Thue-Morse sequence itself.  Equivalently the
    result is M with 0 replaced by the seed and 1 by its complement.
    """
    if isinstance(seed, Word):
        seed = FlipSeed(seed)
    if n < 0:
        raise UsageError("length must be >= 0")
    buf = bytearray(seed.seed.symbols)
    while len(buf) < n:
        buf += buf.translate(_SWAP01)
    return Word(bytes(buf[:n]), 2)
