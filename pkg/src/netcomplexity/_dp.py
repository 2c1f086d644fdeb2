"""Numba kernels for the optimal block parse of a link field.

Costs here count block bits only (the ``2w+1`` header is added by callers).
A block is a ``w``-bit repeat count, a ``w``-bit period length and the
period's bits; with the implicit-final grammar the last block omits the
length, which the decoder recovers as ``ceil(remaining / count)``.  The
decoder treats a block as final exactly when the stream left after its
count field has that many bits, so a non-final block is only legal when its
suffix length differs from that value.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BIG = 1 << 40


@njit(cache=True)
def relaxed_cost(bits, w, implicit):
    """Minimum block cost ignoring the final-block ambiguity rule.

    A lower bound on the exact cost; equal to it for the explicit grammar.
    """
    L = bits.shape[0]
    W = 1 << w
    G = np.full(L + 1, BIG, np.int64)
    G[L] = 0
    run = np.zeros(L + 1, np.int64)
    for i in range(L - 1, -1, -1):
        rem = L - i
        for p in range(1, rem):
            if bits[i] == bits[i + p]:
                run[p] += 1
            else:
                run[p] = 0
        run[rem] = 0
        best = BIG
        if implicit:
            lastp = -1
            for c in range(W, 0, -1):
                p = (rem + c - 1) // c
                if p == lastp:
                    continue
                lastp = p
                if p >= rem or rem - p <= run[p]:
                    best = w + p
                    break
        else:
            top = W if W < rem else rem
            for p in range(1, top + 1):
                if (rem + p - 1) // p > W:
                    continue
                if p == rem or rem - p <= run[p]:
                    best = 2 * w + p
                    break
        top = W if W < rem - 1 else rem - 1
        for p in range(1, top + 1):
            c = 1
            while c <= W:
                j = i + c * p
                if j >= L or (c - 1) * p > run[p]:
                    break
                v = 2 * w + p + G[j]
                if v < best:
                    best = v
                c += 1
        G[i] = best
    return G[0]


@njit(cache=True)
def _or_shift(dst, src, shift, nwords):
    q = shift // 64
    r = shift % 64
    for k in range(nwords - 1, q - 1, -1):
        v = src[k - q] << np.uint64(r)
        if r > 0 and k - q - 1 >= 0:
            v |= src[k - q - 1] >> np.uint64(64 - r)
        dst[k] |= v


@njit(cache=True)
def _clear_bit(s, b, nwords):
    if 0 <= b < 64 * nwords:
        s[b // 64] &= ~(np.uint64(1) << np.uint64(b % 64))


@njit(cache=True)
def _set_bit(s, b, nwords):
    if 0 <= b < 64 * nwords:
        s[b // 64] |= np.uint64(1) << np.uint64(b % 64)


@njit(cache=True)
def suffix_cost_sets(bits, w, implicit, nwords):
    """Achievable suffix costs per position as bitsets over ``[0, 64*nwords)``.

    ``out[i]`` has bit ``t`` set iff the bits ``i..L-1`` can be written as a
    legal block sequence of exactly ``t`` bits.  Costs at or beyond the window
    are dropped, which is exact for every cost inside it.
    """
    L = bits.shape[0]
    W = 1 << w
    out = np.zeros((L + 1, nwords), np.uint64)
    _set_bit(out[L], 0, nwords)
    run = np.zeros(L + 1, np.int64)
    tmp = np.zeros(nwords, np.uint64)
    for i in range(L - 1, -1, -1):
        rem = L - i
        for p in range(1, rem):
            if bits[i] == bits[i + p]:
                run[p] += 1
            else:
                run[p] = 0
        run[rem] = 0
        s = out[i]
        if implicit:
            lastp = -1
            for c in range(W, 0, -1):
                p = (rem + c - 1) // c
                if p == lastp:
                    continue
                lastp = p
                if p >= rem or rem - p <= run[p]:
                    _set_bit(s, w + p, nwords)
        else:
            top = W if W < rem else rem
            for p in range(1, top + 1):
                if (rem + p - 1) // p > W:
                    continue
                if p == rem or rem - p <= run[p]:
                    _set_bit(s, 2 * w + p, nwords)
        top = W if W < rem - 1 else rem - 1
        for p in range(1, top + 1):
            c = 1
            while c <= W:
                j = i + c * p
                if j >= L or (c - 1) * p > run[p]:
                    break
                if implicit:
                    for k in range(nwords):
                        tmp[k] = 0
                    _or_shift(tmp, out[j], 2 * w + p, nwords)
                    _clear_bit(tmp, w + (rem + c - 1) // c, nwords)
                    for k in range(nwords):
                        s[k] |= tmp[k]
                else:
                    _or_shift(s, out[j], 2 * w + p, nwords)
                c += 1
    return out


@njit(cache=True)
def lowest_cost(sets_row):
    for k in range(sets_row.shape[0]):
        v = sets_row[k]
        if v != 0:
            t = 0
            while (v >> np.uint64(t)) & np.uint64(1) == 0:
                t += 1
            return 64 * k + t
    return -1


@njit(cache=True)
def exact_cost_bounded(bits, w, implicit, limit):
    """Exact block cost if it is at most ``limit`` (< 64), else -1."""
    s = suffix_cost_sets(bits, w, implicit, 1)
    v = s[0, 0]
    if limit < 63:
        v &= (np.uint64(1) << np.uint64(limit + 1)) - np.uint64(1)
    if v == 0:
        return -1
    t = 0
    while (v >> np.uint64(t)) & np.uint64(1) == 0:
        t += 1
    return t
