"""Low-level repetition scanners over 0-based letter strings (``bytes``).

Two scanners are provided.  The short scanner is plain Python slicing,
quadratic in the word length, and is what the search loops use.  The long
scanner is exact and runs in O(n log n) numpy work: it samples positions at
multiples of every period, measures the maximal periodic region around each
sample with longest-common-extension queries (suffix array + LCP + sparse
table), and reads every kind of repetition off those regions.

Positions and periods returned here are 0-based.  ``period`` means |X| for
all four kinds: XX, XXX, aXaXa, aXXa.
"""
from __future__ import annotations

import enum

import numpy as np


class Kind(enum.IntEnum):
    SQUARE = 0
    CUBE = 1
    OVERLAP = 2
    WEAK_SQUARE = 3

    def total_length(self, period: int) -> int:
        return _TOTAL[self](period)

    @property
    def min_period(self) -> int:
        return 1 if self in (Kind.SQUARE, Kind.CUBE) else 0


_TOTAL = {
    Kind.SQUARE: lambda p: 2 * p,
    Kind.CUBE: lambda p: 3 * p,
    Kind.OVERLAP: lambda p: 2 * p + 3,
    Kind.WEAK_SQUARE: lambda p: 2 * p + 2,
}

# Words at most this long go through the pure-Python scanner.
SHORT_LIMIT = 320


def matches_at(w: bytes, kind: Kind, start: int, period: int) -> bool:
    """Exact pattern test of ``kind`` with |X| = period at ``start``."""
    if period < kind.min_period or start < 0:
        return False
    end = start + kind.total_length(period)
    if end > len(w):
        return False
    p = period
    if kind is Kind.SQUARE:
        return w[start:start + p] == w[start + p:end]
    if kind is Kind.CUBE:
        x = w[start:start + p]
        return x == w[start + p:start + 2 * p] and x == w[start + 2 * p:end]
    if kind is Kind.OVERLAP:
        q = p + 1
        return w[start:start + q + 1] == w[start + q:end]
    return (w[start] == w[end - 1]
            and w[start + 1:start + 1 + p] == w[start + 1 + p:end - 1])


def first_short(w: bytes, kind: Kind):
    """Leftmost-then-shortest occurrence as ``(start, period)`` or None."""
    n = len(w)
    if kind is Kind.SQUARE:
        for i in range(n - 1):
            for p in range(1, (n - i) // 2 + 1):
                if w[i:i + p] == w[i + p:i + 2 * p]:
                    return i, p
    elif kind is Kind.CUBE:
        for i in range(n - 2):
            for p in range(1, (n - i) // 3 + 1):
                x = w[i:i + p]
                if x == w[i + p:i + 2 * p] and x == w[i + 2 * p:i + 3 * p]:
                    return i, p
    elif kind is Kind.OVERLAP:
        for i in range(n - 2):
            for x in range((n - i - 3) // 2 + 1):
                q = x + 1
                if w[i:i + q + 1] == w[i + q:i + 2 * q + 1]:
                    return i, x
    else:
        for i in range(n - 1):
            a = w[i]
            for x in range((n - i - 2) // 2 + 1):
                if (a == w[i + 2 * x + 1]
                        and w[i + 1:i + 1 + x] == w[i + 1 + x:i + 1 + 2 * x]):
                    return i, x
    return None


def ends_after(w: bytes, kind: Kind, since: int) -> bool:
    """True if some occurrence of ``kind`` ends at an index >= ``since``.

    Used incrementally: when ``w[:since]`` is already known to be clean, this
    decides whether ``w`` is clean while only looking at the new tail.
    """
    n = len(w)
    for e in range(max(since, 0), n):
        L = e + 1
        if kind is Kind.SQUARE:
            for p in range(1, L // 2 + 1):
                if w[L - 2 * p:L - p] == w[L - p:L]:
                    return True
        elif kind is Kind.CUBE:
            for p in range(1, L // 3 + 1):
                x = w[L - p:L]
                if x == w[L - 2 * p:L - p] and x == w[L - 3 * p:L - 2 * p]:
                    return True
        elif kind is Kind.OVERLAP:
            for q in range(1, (L - 1) // 2 + 1):
                s = L - 2 * q - 1
                if w[s:s + q + 1] == w[s + q:L]:
                    return True
        else:
            last = w[e]
            for x in range((L - 2) // 2 + 1):
                s = L - 2 * x - 2
                if w[s] == last and w[s + 1:s + 1 + x] == w[s + 1 + x:L - 1]:
                    return True
    return False


class _LCE:
    """Longest-common-extension oracle for one string."""

    def __init__(self, w: bytes):
        n = len(w)
        self.n = n
        s = np.frombuffer(w, dtype=np.uint8).astype(np.int64)
        sa, rank = _suffix_array(s)
        self.rank = rank
        lcp = _kasai(w, sa.tolist(), rank.tolist())
        self.table = _sparse_table(np.asarray(lcp, dtype=np.int64))

    def query(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        """LCE of suffixes i and j (elementwise); requires i != j, both < n."""
        ri = self.rank[i]
        rj = self.rank[j]
        lo = np.minimum(ri, rj) + 1
        hi = np.maximum(ri, rj)
        length = hi - lo + 1
        lev = np.zeros_like(length)
        # floor(log2(length)) without floats
        tmp = length.copy()
        while True:
            tmp >>= 1
            if not tmp.any():
                break
            lev += tmp > 0
        return np.minimum(self.table[lev, lo], self.table[lev, hi - (1 << lev) + 1])


def _suffix_array(s: np.ndarray):
    n = len(s)
    rank = s.copy()
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[:n - k] = rank[k:] + 1
        key = rank * (n + 2) + second
        sa = np.argsort(key, kind="stable")
        sk = key[sa]
        new = np.empty(n, dtype=np.int64)
        new[sa] = np.concatenate(([0], np.cumsum(sk[1:] != sk[:-1])))
        rank = new
        if n == 0 or rank[sa[-1]] == n - 1 or k >= n:
            return sa, rank
        k *= 2


def _kasai(w: bytes, sa: list, rank: list) -> list:
    n = len(w)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and w[i + h] == w[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


def _sparse_table(a: np.ndarray) -> np.ndarray:
    n = len(a)
    levels = max(1, n.bit_length())
    table = np.zeros((levels, n), dtype=np.int64)
    table[0] = a
    span = 1
    for lev in range(1, levels):
        prev = table[lev - 1]
        cur = table[lev]
        cur[:] = prev
        if span < n:
            cur[:n - span] = np.minimum(prev[:n - span], prev[span:])
        span *= 2
    return table


# Maximum number of (period, sample) pairs handled per numpy batch.
_BATCH = 1 << 20


def _periodic_regions(w: bytes, fwd: _LCE, bwd: _LCE, pmin: int, pmax: int):
    """Yield ``(p, a, m)`` arrays: a maximal region [a, a+m) where
    w[k] == w[k+p], found from samples at multiples of p.  Every region of
    length >= p is reported at least once."""
    n = len(w)
    p = pmin
    while p <= pmax:
        ps, qs = [], []
        size = 0
        while p <= pmax and size < _BATCH:
            q = np.arange(0, n - p, p, dtype=np.int64)
            ps.append(np.full(len(q), p, dtype=np.int64))
            qs.append(q)
            size += len(q)
            p += 1
        P = np.concatenate(ps)
        Q = np.concatenate(qs)
        ahead = fwd.query(Q, Q + P)
        back = np.zeros_like(Q)
        has = Q > 0
        if has.any():
            qq = Q[has]
            pp = P[has]
            back[has] = bwd.query(n - qq, n - qq - pp)
        yield P, Q - back, back + ahead


def first_long(w: bytes, kinds) -> dict:
    """Leftmost-then-shortest ``(start, period)`` (or None) for each kind."""
    n = len(w)
    kinds = [Kind(k) for k in kinds]
    best = {k: None for k in kinds}
    if n < 2:
        return best

    def offer(kind, starts, periods):
        if len(starts) == 0:
            return
        order = np.lexsort((periods, starts))
        cand = (int(starts[order[0]]), int(periods[order[0]]))
        if best[kind] is None or cand < best[kind]:
            best[kind] = cand

    arr = np.frombuffer(w, dtype=np.uint8)
    adj = np.flatnonzero(arr[:-1] == arr[1:]).astype(np.int64)
    if Kind.WEAK_SQUARE in best and len(adj):
        best[Kind.WEAK_SQUARE] = (int(adj[0]), 0)
    if Kind.OVERLAP in best:
        trip = np.flatnonzero((arr[:-2] == arr[1:-1]) & (arr[1:-1] == arr[2:])) if n >= 3 else []
        if len(trip):
            best[Kind.OVERLAP] = (int(trip[0]), 0)

    fwd = _LCE(w)
    bwd = _LCE(w[::-1])
    for P, A, M in _periodic_regions(w, fwd, bwd, 1, n // 2):
        if Kind.SQUARE in best:
            sel = M >= P
            offer(Kind.SQUARE, A[sel], P[sel])
        if Kind.CUBE in best:
            sel = M >= 2 * P
            offer(Kind.CUBE, A[sel], P[sel])
        if Kind.OVERLAP in best:
            sel = M >= P + 1
            offer(Kind.OVERLAP, A[sel], P[sel] - 1)
        if Kind.WEAK_SQUARE in best:
            sel = M >= P
            a, m, p = A[sel], M[sel], P[sel]
            if len(a) == 0:
                continue
            # square starting at the region's left end, flanked by equal letters
            right = a + 2 * p
            ok = (a >= 1) & (right <= n - 1)
            ok_idx = np.flatnonzero(ok)
            ok[ok_idx] = arr[a[ok_idx] - 1] == arr[right[ok_idx]]
            offer(Kind.WEAK_SQUARE, a[ok] - 1, p[ok])
            # deeper in the region the flank test reduces to an equal
            # adjacent pair at index t in [a+2p, a+m+p-1]
            rest = ~ok
            if len(adj) and rest.any():
                a2, m2, p2 = a[rest], m[rest], p[rest]
                idx = np.searchsorted(adj, a2 + 2 * p2)
                inside = idx < len(adj)
                t = np.full(len(a2), -1, dtype=np.int64)
                t[inside] = adj[idx[inside]]
                good = inside & (t <= a2 + m2 + p2 - 1)
                offer(Kind.WEAK_SQUARE, t[good] - 2 * p2[good], p2[good])
    for kind, hit in best.items():
        if hit is not None:
            assert matches_at(w, kind, *hit), (kind, hit)
    return best


def first(w: bytes, kind: Kind):
    if len(w) <= SHORT_LIMIT:
        return first_short(w, kind)
    return first_long(w, [kind])[kind]
