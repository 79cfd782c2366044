"""Numba kernels: maximal-run detection and windowed gap statistics.

The run detector is a divide-and-conquer over the text: each level finds
the squares that cross the segment midpoint with four Z-function passes,
emits them as (start_lo, start_hi, period) ranges, and the ranges are
then extended to maximal periodic fragments with their minimal period.
Total work is O(n log n) plus output.
"""

from __future__ import annotations

import numpy as np
from numba import njit
from numba.typed import Dict
from numba.types import int64, uint64

SEP = np.uint8(255)  # never a valid symbol (alphabets are < 256 but symbols < alphabet_size <= 250 in practice)


@njit(cache=True)
def _zfunc(a):
    n = a.shape[0]
    z = np.zeros(n, np.int64)
    if n == 0:
        return z
    z[0] = n
    l = 0
    r = 0
    for i in range(1, n):
        if i < r:
            k = z[i - l]
            if k < r - i:
                z[i] = k
                continue
            z[i] = r - i
        while i + z[i] < n and a[z[i]] == a[i + z[i]]:
            z[i] += 1
        if i + z[i] > r:
            l = i
            r = i + z[i]
    return z


@njit(cache=True)
def _concat_sep(a, b):
    n, m = a.shape[0], b.shape[0]
    out = np.empty(n + m + 1, np.uint8)
    out[:n] = a
    out[n] = SEP
    out[n + 1 :] = b
    return out


@njit(cache=True)
def _crossing_square_ranges(s):
    """All squares, as (start_lo, start_hi, period) ranges; duplicates possible."""
    n = s.shape[0]
    cap = 256
    out = np.empty((cap, 3), np.int64)
    cnt = 0
    if n < 2:
        return out[:0]
    stack = np.empty((2 * (int(np.log2(n)) + 3), 2), np.int64)
    stack[0, 0] = 0
    stack[0, 1] = n
    sp = 1
    while sp > 0:
        sp -= 1
        lo = stack[sp, 0]
        hi = stack[sp, 1]
        m = hi - lo
        if m < 2:
            continue
        nu = m // 2
        mid = lo + nu
        stack[sp, 0] = lo
        stack[sp, 1] = mid
        sp += 1
        stack[sp, 0] = mid
        stack[sp, 1] = hi
        sp += 1
        u = s[lo:mid]
        v = s[mid:hi]
        ru = u[::-1].copy()
        rv = v[::-1].copy()
        a_len = nu
        b_len = m - nu
        z1 = _zfunc(ru)
        z2 = _zfunc(_concat_sep(v, u))
        z3 = _zfunc(_concat_sep(ru, rv))
        z4 = _zfunc(v)
        for cntr in range(m):
            if cntr < nu:
                # period pair anchored at (cntr, nu): copies l = nu - cntr apart
                l = nu - cntr
                k1 = z1[l] if l < a_len else 0
                k2 = z2[b_len + 1 + cntr]
                if k2 > l:
                    k2 = l
                if k1 + k2 < l:
                    continue
                p_lo = cntr - k1
                p_hi = cntr + k2 - l
            else:
                # anchored at (nu - 1, cntr): period l = cntr - nu + 1
                l = cntr - nu + 1
                k1 = z3[a_len + 1 + (m - 1 - cntr)]
                k2 = z4[l] if l < b_len else 0
                if k1 + k2 < l:
                    continue
                p_lo = nu - k1
                p_hi = nu + k2 - l
            if cnt == cap:
                cap *= 2
                grown = np.empty((cap, 3), np.int64)
                grown[:cnt] = out[:cnt]
                out = grown
            out[cnt, 0] = lo + p_lo
            out[cnt, 1] = lo + p_hi
            out[cnt, 2] = l
            cnt += 1
    return out[:cnt]


@njit(cache=True)
def _maximal_runs(s, ranges):
    """Extend square ranges to maximal runs with minimal periods; may repeat rows."""
    n = s.shape[0]
    m = ranges.shape[0]
    out = np.empty((m, 3), np.int64)
    for r in range(m):
        st = ranges[r, 0]
        l = ranges[r, 2]
        en = ranges[r, 1] + 2 * l
        while st > 0 and s[st - 1] == s[st - 1 + l]:
            st -= 1
        while en < n and s[en] == s[en - l]:
            en += 1
        # minimal period divides any period <= len/2 of a run
        p = l
        for d in range(1, l):
            if l % d == 0:
                ok = True
                for i in range(st, en - d):
                    if s[i] != s[i + d]:
                        ok = False
                        break
                if ok:
                    p = d
                    break
        if p < l:
            while st > 0 and s[st - 1] == s[st - 1 + p]:
                st -= 1
            while en < n and s[en] == s[en - p]:
                en += 1
        out[r, 0] = st
        out[r, 1] = en
        out[r, 2] = p
    return out


def find_runs(arr: np.ndarray) -> list[tuple[int, int, int]]:
    """All maximal runs (start, end, minimal period) of a uint8 array, sorted."""
    ranges = _crossing_square_ranges(arr)
    if ranges.shape[0] == 0:
        return []
    runs = _maximal_runs(arr, ranges)
    return sorted({(int(a), int(b), int(p)) for a, b, p in runs})


@njit(cache=True)
def _gap_stats_kernel(a, ell, bits):
    """Worst start-to-start gap over equal windows of length ell, plus singles.

    Windows are packed into uint64 codes (ell*bits <= 64 required).
    Returns (worst_gap, codes_seen, single_codes); worst_gap is -1 when
    no window recurs.
    """
    n = a.shape[0]
    total = n - ell + 1
    shift = uint64(bits)
    width = ell * bits
    if width >= 64:
        mask = uint64(0xFFFFFFFFFFFFFFFF)
    else:
        mask = (uint64(1) << uint64(width)) - uint64(1)
    last = Dict.empty(key_type=uint64, value_type=int64)
    count = Dict.empty(key_type=uint64, value_type=int64)
    code = uint64(0)
    worst = int64(-1)
    for i in range(n):
        code = ((code << shift) | uint64(a[i])) & mask
        if i >= ell - 1:
            start = i - ell + 1
            if code in last:
                gap = start - last[code]
                if gap > worst:
                    worst = gap
                count[code] += 1
            else:
                count[code] = 1
            last[code] = start
    singles = np.empty(len(count), np.uint64)
    k = 0
    for c in count:
        if count[c] == 1:
            singles[k] = c
            k += 1
    return worst, len(count), singles[:k]


def gap_stats_fast(arr: np.ndarray, ell: int, alphabet_size: int):
    """Dispatchable wrapper; returns (worst_gap or None, distinct, single window words)."""
    bits = max(1, (alphabet_size - 1).bit_length())
    if ell * bits > 64:
        raise ValueError("window does not fit in 64-bit code")
    worst, distinct, singles = _gap_stats_kernel(arr, ell, bits)
    words = []
    for code in singles:
        code = int(code)
        syms = bytearray(ell)
        for j in range(ell - 1, -1, -1):
            syms[j] = code & ((1 << bits) - 1)
            code >>= bits
        words.append(bytes(syms))
    return (None if worst < 0 else int(worst)), int(distinct), sorted(words)


def warmup() -> None:
    """Force-compile the kernels on tiny inputs (caches to disk)."""
    find_runs(np.frombuffer(b"\x00\x00\x01\x00\x01\x00\x01", dtype=np.uint8))
    gap_stats_fast(np.frombuffer(b"\x00\x01\x00\x01", dtype=np.uint8), 2, 2)
