"""Single-word numba kernels for capped compressed lengths.

Everything here assumes a link field shorter than 64 bits (n <= 11) so that
period sets and suffix-cost sets fit in one machine word.  Bit ``p-1`` of a
period mask stands for period ``p``; bit ``t`` of a cost set for cost ``t``.
"""

from __future__ import annotations

import numpy as np
from numba import njit
from numba.cpython.unsafe.numbers import trailing_zeros

ONE = np.uint64(1)
ZERO = np.uint64(0)
TOP = np.uint64(1 << 63)
ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
MAXL = 63
MAXW = 6


def _low_py(k: int) -> int:
    return (1 << max(0, min(k, 64))) - 1


def build_tables():
    """Lookup tables indexed by wordsize and remaining length.

    ``ceil[rem, c]``      ceil(rem / c)
    ``fin[w, rem]``       periods usable by an implicit final block
    ``finx[w, rem]``      periods usable by an explicit final block
    ``div[w, span]``      periods p <= 2**w tiling span with at most 2**w copies
    ``geq[span]``         periods >= span (trivially periodic on a span)
    """
    R = MAXL + 1
    ceil = np.zeros((R + 1, 65), np.int64)
    for rem in range(R + 1):
        for c in range(1, 65):
            ceil[rem, c] = -(-rem // c)
    fin = np.zeros((MAXW + 1, R + 1), np.uint64)
    finx = np.zeros((MAXW + 1, R + 1), np.uint64)
    div = np.zeros((MAXW + 1, R + 1), np.uint64)
    for w in range(1, MAXW + 1):
        W = 1 << w
        for rem in range(1, R + 1):
            m = 0
            for c in range(1, W + 1):
                p = -(-rem // c)
                if p <= 64:
                    m |= 1 << (p - 1)
            fin[w, rem] = np.uint64(m)
            m = 0
            for p in range(1, min(W, rem) + 1):
                if -(-rem // p) <= W:
                    m |= 1 << (p - 1)
            finx[w, rem] = np.uint64(m)
            m = 0
            for p in range(1, min(W, rem) + 1):
                if rem % p == 0 and rem // p <= W:
                    m |= 1 << (p - 1)
            div[w, rem] = np.uint64(m)
    geq = np.zeros(R + 2, np.uint64)
    for span in range(R + 2):
        geq[span] = np.uint64(((1 << 64) - 1) ^ _low_py(span - 1))
    return ceil, fin, finx, div, geq


CEIL, FIN, FINX, DIV, GEQ = build_tables()


@njit(cache=True, inline="always")
def _ctz(v):
    return np.int64(trailing_zeros(v))


@njit(cache=True, inline="always")
def _low(k):
    if k <= 0:
        return np.uint64(0)
    if k >= 64:
        return ALL
    return (ONE << np.uint64(k)) - ONE




@njit(cache=True)
def exact_word(bits, L, w, implicit, limit, out, run, ceil, fin, finx, geq):
    """Exact minimal block cost of ``bits[:L]`` if ``<= limit`` (< 64), else -1.

    ``out`` (length >= L+1, uint64) and ``run`` (length >= 65, int64) are
    scratch.  Suffix-cost sets are single words; costs above ``limit`` are
    dropped as they appear.
    """
    W = 1 << w
    keep = _low(limit + 1)
    out[L] = ONE
    for p in range(W + 1):
        run[p] = 0
    per = ALL  # bit p-1: suffix [i, L) is p-periodic
    nxt = np.uint64(0)  # bit p-1: bits[i + p]
    for i in range(L - 1, -1, -1):
        rem = L - i
        b = bits[i]
        eq = nxt if b else ~nxt
        per = (per & eq) | geq[rem]
        for p in range(1, W + 1):
            if (nxt >> np.uint64(p - 1)) & ONE == np.uint64(b) and p < rem:
                run[p] += 1
            else:
                run[p] = 0
        nxt = (nxt << ONE) | np.uint64(b)
        if implicit:
            s = (fin[w, rem] & per) << np.uint64(w + 1)
        else:
            s = (finx[w, rem] & per) << np.uint64(2 * w + 1)
        top = W if W < rem - 1 else rem - 1
        for p in range(1, top + 1):
            sh = 2 * w + p
            if sh > limit:
                break
            acc = np.uint64(0)
            r = run[p]
            j = i + p
            c = 1
            while c <= W and j < L and (c - 1) * p <= r:
                v = out[j]
                if implicit:
                    f = ceil[rem, c] - w - p
                    if 0 <= f < 64:
                        v &= ~(ONE << np.uint64(f))
                acc |= v
                c += 1
                j += p
            s |= acc << np.uint64(sh)
        out[i] = s & keep
    v = out[0]
    if v == 0:
        return -1
    return _ctz(v)


BIG = 1 << 40


@njit(cache=True, inline="always")
def _masks(F, i, L, w, B, implicit, fin, finx):
    """Periods through which a block starting at ``i`` could still pay off.

    Returns (non-final periods, final periods); ``F`` is the cost of the
    cheapest parse of the bits before ``i``.
    """
    W = 1 << w
    rem = L - i
    if implicit:
        pnf = B - 3 * w - 1 - F
        pf = B - w - F
        fm = fin[w, rem]
    else:
        pnf = B - 4 * w - 1 - F
        pf = B - 2 * w - F
        fm = finx[w, rem]
    top = W
    if pnf < top:
        top = pnf
    if rem - 1 < top:
        top = rem - 1
    return _low(top), _low(pf) & fm


@njit(cache=True, inline="always")
def _refine(X, i, j, Q):
    """Drop from ``Q`` every period ``p < j - i`` for which ``X[i:j]`` is not p-periodic."""
    q = Q
    res = Q
    while q != 0:
        t = _ctz(q)
        q &= q - ONE
        p = t + 1
        if p < j - i:
            D = X ^ (X >> np.uint64(p))
            if D & (_low(j - p) & ~_low(i)) != 0:
                res &= ~(ONE << np.uint64(t))
    return res


@njit(cache=True, error_model="numpy")
def labeling_histogram(adj, n, ws, implicit, cls, ceil, fin, finx, div, geq, fact):
    """Histogram of ``min(zeta, cap)`` over all ``n!`` labelings of a graph.

    Labels are assigned in order 0..n-1; giving label ``d`` to a vertex fixes
    the next ``d`` link bits, so labelings sharing a prefix share the filter
    state.  Per wordsize the filter keeps the link positions from which a
    parse could still beat the cap.  Positions that can still start a
    non-final block carry their relaxed prefix cost and surviving periods and
    are updated bit by bit; positions only usable as the start of the final
    block carry a set of candidate periods, re-checked once per column
    against the packed prefix.  A subtree with no live position is counted at
    the cap wholesale.  Interchangeable vertices (same class in ``cls``) are
    branched on once and weighted by the class's unused size.  Survivors at
    the leaves get the exact cost.
    """
    L = n * (n - 1) // 2
    cap = L + n + 1
    nw = ws.shape[0]
    counts = np.zeros(cap + 1, np.int64)
    Bs = np.empty(nw, np.int64)
    for k in range(nw):
        Bs[k] = L + n - 2 * ws[k] - 1
    S = 64
    # live non-final-capable positions
    apos = np.zeros((n + 1, nw * S), np.int64)
    aF = np.zeros((n + 1, nw * S), np.int64)
    aps = np.zeros((n + 1, nw * S), np.uint64)
    anf = np.zeros((n + 1, nw * S), np.uint64)
    afq = np.zeros((n + 1, nw * S), np.uint64)
    nal = np.zeros((n + 1, nw), np.int64)
    # final-only positions
    fpos = np.zeros((n + 1, nw * S), np.int64)
    fF = np.zeros((n + 1, nw * S), np.int64)
    fQ = np.zeros((n + 1, nw * S), np.uint64)
    nfo = np.zeros((n + 1, nw), np.int64)
    for k in range(nw):
        unf, uf = _masks(0, 0, L, ws[k], Bs[k], implicit, fin, finx)
        if unf != 0:
            apos[0, k * S] = 0
            aF[0, k * S] = 0
            aps[0, k * S] = ALL
            anf[0, k * S] = unf
            afq[0, k * S] = uf
            nal[0, k] = 1
        elif uf != 0:
            fpos[0, k * S] = 0
            fF[0, k * S] = 0
            fQ[0, k * S] = uf
            nfo[0, k] = 1
    lab = np.zeros(n, np.int64)
    used = np.zeros(n, np.bool_)
    cur = np.zeros(n + 1, np.int64)
    wt = np.zeros(n + 1, np.int64)
    H = np.zeros(n + 1, np.uint64)
    X = np.zeros(n + 1, np.uint64)
    bits = np.zeros(64, np.uint8)
    MM = np.zeros(64, np.uint64)
    candF = np.zeros(64, np.int64)
    P = np.zeros(65, np.uint64)
    out = np.zeros(65, np.uint64)
    run = np.zeros(66, np.int64)
    wt[0] = 1
    d = 0
    twins = False
    for v in range(n):
        if cls[v] != v:
            twins = True
    while d >= 0:
        v = cur[d]
        if twins:
            while v < n:
                if not used[v]:
                    ok = True
                    for u in range(v):
                        if not used[u] and cls[u] == cls[v]:
                            ok = False
                            break
                    if ok:
                        break
                v += 1
        else:
            while v < n and used[v]:
                v += 1
        if v >= n:
            d -= 1
            if d >= 0:
                used[lab[d]] = False
                cur[d] += 1
            continue
        cur[d] = v
        mult = 1
        if twins:
            mult = 0
            for u in range(n):
                if not used[u] and cls[u] == cls[v]:
                    mult += 1
        wnew = wt[d] * mult
        lab[d] = v
        e1 = d + 1
        j0 = d * (d - 1) // 2
        j1 = j0 + d
        h = H[d]
        x = X[d]
        for a in range(d):
            b = adj[lab[a], v]
            bits[j0 + a] = b
            ub = np.uint64(b)
            MM[a] = ~(h ^ (ZERO - ub))
            h = (h << ONE) | ub
            x |= ub << np.uint64(j0 + a)
        H[e1] = h
        X[e1] = x
        # P[i]: periods p for which bits i..j1-1 are p-periodic
        lo = j0
        for k in range(nw):
            for e in range(nfo[d, k]):
                if fpos[d, k * S + e] < lo:
                    lo = fpos[d, k * S + e]
            for e in range(nal[d, k]):
                if apos[d, k * S + e] < lo:
                    lo = apos[d, k * S + e]
        per = ALL
        P[j1] = ALL
        for i in range(j1 - 1, lo - 1, -1):
            nx = x >> np.uint64(i + 1)
            eq = ~(nx ^ (ZERO - ((x >> np.uint64(i)) & ONE)))
            per = (per & eq) | geq[j1 - i]
            P[i] = per
        anyalive = False
        for k in range(nw):
            w = ws[k]
            B = Bs[k]
            w2 = 2 * w
            base = k * S
            m = 0
            mf = 0
            # final-only positions: one packed re-check per column
            for e in range(nfo[d, k]):
                i = fpos[d, base + e]
                Q = P[i] & fQ[d, base + e]
                fpos[e1, base + mf] = i
                fF[e1, base + mf] = fF[d, base + e]
                fQ[e1, base + mf] = Q
                mf += Q != 0
            for a in range(d):
                candF[a] = BIG
            for e in range(nal[d, k]):
                i = apos[d, base + e]
                F = aF[d, base + e]
                ps = aps[d, base + e]
                unf = anf[d, base + e]
                alive = True
                for a in range(d):
                    span = j0 + a + 1 - i
                    ps &= MM[a] | geq[span]
                    if ps & unf == 0:
                        alive = False
                        break
                    cand = F + w2 + _ctz((ps & div[w, span]) | TOP) + 1
                    candF[a] = min(candF[a], cand)
                if alive:
                    apos[e1, base + m] = i
                    aF[e1, base + m] = F
                    aps[e1, base + m] = ps
                    anf[e1, base + m] = unf
                    afq[e1, base + m] = afq[d, base + e]
                    m += 1
                else:
                    Q = P[i] & afq[d, base + e]
                    if Q != 0:
                        fpos[e1, base + mf] = i
                        fF[e1, base + mf] = F
                        fQ[e1, base + mf] = Q
                        mf += 1
            for a0 in range(d):
                j = j0 + a0 + 1
                if j >= L:
                    break
                F = candF[a0]
                if F > B:
                    continue
                unf, uf = _masks(F, j, L, w, B, implicit, fin, finx)
                ps = ALL
                alive = unf != 0
                if alive:
                    for a in range(a0 + 1, d):
                        span = a - a0
                        ps &= MM[a] | geq[span]
                        if ps & unf == 0:
                            alive = False
                            break
                        cand = F + w2 + _ctz((ps & div[w, span]) | TOP) + 1
                        candF[a] = min(candF[a], cand)
                if alive:
                    apos[e1, base + m] = j
                    aF[e1, base + m] = F
                    aps[e1, base + m] = ps
                    anf[e1, base + m] = unf
                    afq[e1, base + m] = uf
                    m += 1
                elif uf != 0:
                    Q = P[j] & uf
                    if Q != 0:
                        fpos[e1, base + mf] = j
                        fF[e1, base + mf] = F
                        fQ[e1, base + mf] = Q
                        mf += 1
            nal[e1, k] = m
            nfo[e1, k] = mf
            if m > 0 or mf > 0:
                anyalive = True
        if e1 == n:
            z = cap
            if anyalive:
                for k in range(nw):
                    w = ws[k]
                    base = k * S
                    extra = w if implicit else 2 * w
                    best = BIG
                    for e in range(nal[e1, k]):
                        fm = aps[e1, base + e] & afq[e1, base + e]
                        if fm != 0:
                            cost = aF[e1, base + e] + extra + _ctz(fm) + 1
                            if cost < best:
                                best = cost
                    for e in range(nfo[e1, k]):
                        cost = fF[e1, base + e] + extra + _ctz(fQ[e1, base + e]) + 1
                        if cost < best:
                            best = cost
                    if best <= Bs[k]:
                        c = exact_word(bits, L, w, implicit, Bs[k], out, run, ceil, fin, finx, geq)
                        if c >= 0 and 2 * w + 1 + c < z:
                            z = 2 * w + 1 + c
            counts[z] += wnew
            cur[d] += 1
            continue
        if not anyalive:
            counts[cap] += wnew * fact[n - e1]
            cur[d] += 1
            continue
        used[v] = True
        wt[e1] = wnew
        d = e1
        cur[d] = 0
    return counts


@njit(cache=True)
def capped_zeta_word(x, n, ws, implicit, bits, out, run, ceil, fin, finx, geq):
    """``min(zeta, cap)`` for the description whose link field is ``x``."""
    L = n * (n - 1) // 2
    cap = L + n + 1
    for t in range(L):
        bits[t] = (x >> np.uint64(t)) & ONE
    z = cap
    for k in range(ws.shape[0]):
        w = ws[k]
        B = L + n - 2 * w - 1
        if B < 0:
            continue
        if L == 0:
            c = 0
        else:
            c = exact_word(bits, L, w, implicit, B, out, run, ceil, fin, finx, geq)
        if c >= 0 and 2 * w + 1 + c < z:
            z = 2 * w + 1 + c
    return z


@njit(cache=True)
def zeta_many(xs, n, ws, implicit, ceil, fin, finx, geq):
    bits = np.zeros(64, np.uint8)
    out = np.zeros(65, np.uint64)
    run = np.zeros(66, np.int64)
    res = np.empty(xs.shape[0], np.int64)
    for t in range(xs.shape[0]):
        res[t] = capped_zeta_word(xs[t], n, ws, implicit, bits, out, run, ceil, fin, finx, geq)
    return res


@njit(cache=True)
def sweep_histogram(n, l, ws, implicit, codes, code_cls, ncls, ceil, fin, finx, geq):
    """Per-class histogram of capped zeta over every link field with ``l`` ones.

    ``codes`` is the sorted union of all classes' link fields and
    ``code_cls`` the class of each; fields are generated in increasing order
    by Gosper's hack and located in ``codes`` by binary search.
    """
    L = n * (n - 1) // 2
    cap = L + n + 1
    hist = np.zeros((ncls, cap + 1), np.int64)
    bits = np.zeros(64, np.uint8)
    out = np.zeros(65, np.uint64)
    run = np.zeros(66, np.int64)
    x = _low(l)
    top = ONE << np.uint64(L)
    while True:
        z = capped_zeta_word(x, n, ws, implicit, bits, out, run, ceil, fin, finx, geq)
        idx = np.searchsorted(codes, x)
        if idx >= codes.shape[0] or codes[idx] != x:
            hist[0, 0] = -1  # unclassified field: the class table is incomplete
            return hist
        hist[code_cls[idx], z] += 1
        if x == 0:
            break
        c = x & (~x + ONE)
        r = x + c
        x = (((r ^ x) >> np.uint64(2)) >> np.uint64(_ctz(c))) | r
        if x >= top:
            break
    return hist
