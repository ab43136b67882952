"""Pure-Python implementations of the hot kernels.

Same contracts as the compiled ``_speedups`` module; used when the extension
is not built or when ``OKPLANAR_PURE_PYTHON`` is set.
"""

from __future__ import annotations


def crossing_csr(n, us, vs):
    """Return the crossing graph of chords ``(us[e], vs[e])`` in CSR form.

    Chords must satisfy ``us[e] < vs[e]``.  Two chords cross iff their
    endpoints interleave strictly (``a < c < b < d``).  The sweep keeps the
    chords already started in a segment tree keyed by right endpoint and
    reports only non-empty leaves, so the cost is
    ``O((m + crossings) log n)``.

    Returns ``(ptr, idx)`` with the neighbours of ``e`` in
    ``idx[ptr[e]:ptr[e + 1]]``, sorted ascending.
    """
    m = len(us)
    by_left = [[] for _ in range(n)]
    for e in range(m):
        by_left[us[e]].append(e)
    # chords bucketed by right endpoint, ascending left endpoint inside a
    # bucket: the inserted chords of a bucket are always a prefix.
    by_right = [[] for _ in range(n)]
    for a in range(n):
        for e in by_left[a]:
            by_right[vs[e]].append(e)
    inserted = [0] * n

    size = 1
    while size < max(n, 1):
        size *= 2
    tree = [0] * (2 * size)

    pairs = [[] for _ in range(m)]
    for p in range(n):
        starting = by_left[p]
        if not starting:
            continue
        for e in starting:
            lo, hi = p + 1, vs[e] - 1
            if lo > hi or tree[1] == 0:
                continue
            stack = [(1, 0, size - 1)]
            while stack:
                node, nlo, nhi = stack.pop()
                if tree[node] == 0 or nhi < lo or nlo > hi:
                    continue
                if nlo == nhi:
                    for f in by_right[nlo][: inserted[nlo]]:
                        pairs[e].append(f)
                        pairs[f].append(e)
                    continue
                mid = (nlo + nhi) // 2
                stack.append((2 * node + 1, mid + 1, nhi))
                stack.append((2 * node, nlo, mid))
        for e in starting:
            r = vs[e]
            inserted[r] += 1
            node = r + size
            while node:
                tree[node] += 1
                node //= 2

    ptr = [0] * (m + 1)
    idx = []
    for e in range(m):
        row = sorted(pairs[e])
        idx.extend(row)
        ptr[e + 1] = len(idx)
    return ptr, idx


class PiercingFilter:
    """Callable ``(x, y, cands) -> ids`` keeping the candidates intertwined with
    link ``(x, y)``, ``x < y``, ordered bottom-to-top and deduplicated."""

    def __init__(self, n, us, vs):
        self.n = n
        self.us = list(us)
        self.vs = list(vs)

    def __call__(self, x, y, cands):
        n, us, vs = self.n, self.us, self.vs
        keyed = set()
        for e in cands:
            p, q = us[e], vs[e]
            p_in = x < p < y
            if p_in == (x < q < y):
                continue
            right, left = (p, q) if p_in else (q, p)
            if left == x or left == y:
                continue
            keyed.add((right * n + (x - left) % n, e))
        return [e for _, e in sorted(keyed)]
